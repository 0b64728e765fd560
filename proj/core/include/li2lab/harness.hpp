#ifndef LI2LAB_HARNESS_HPP
#define LI2LAB_HARNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "li2lab/expr.hpp"

namespace li2lab {

enum class EntryStatus { verified, quarantined, expected_fail };

// Branch overrides, applied only with a recorded adjudication note next to
// the entry: a small imaginary shift on a parameter (cut-side choice) or a
// flipped principal square root at specific call sites.
struct BranchOverrides {
  struct ImShift {
    std::string param;
    int eps_exp = -30;  // shift = sign * 10^eps_exp * i
    int sign = 1;
  };
  std::vector<ImShift> im_shifts;
  std::vector<int> conjugate_sqrt_sites;
  bool empty() const { return im_shifts.empty() && conjugate_sqrt_sites.empty(); }
};

struct ParamSpec {
  std::string name;
  std::string domain;  // interval(a,b) | rect(a,b,c,d) | disk(cx,cy,r)
};

struct SamplingRule {
  int count = 3;
  std::optional<uint64_t> seed;             // default: config seed
  std::vector<std::string> constraints;     // expressions required >= 0
};

struct CorpusEntry {
  std::string id;
  std::string lhs;
  std::string rhs;
  std::vector<ParamSpec> params;
  std::vector<std::map<std::string, std::string>> samples;  // explicit bindings
  SamplingRule sampling;
  int precision_hint = 0;
  EntryStatus status = EntryStatus::verified;
  std::string paper_ref;
  BranchOverrides branch_overrides;
  std::string section;  // derived from the corpus directory layout
};

CorpusEntry entry_from_json_text(const std::string& text);
CorpusEntry entry_from_file(const std::string& path);

struct SampleOutcome {
  std::string binding_desc;
  Real residual;
  std::string error;  // empty when the evaluation succeeded
};

struct Report {
  std::string id;
  EntryStatus status = EntryStatus::verified;
  std::vector<SampleOutcome> samples;
  Real max_residual;
  Real tolerance;
  bool pass = false;  // max residual < tolerance and no evaluation error
  double wall_seconds = 0.0;
};

static constexpr uint64_t kDefaultSeed = 0x5eed0d11u;

// Evaluates |lhs - rhs| at every sample binding at
// max(ctx.digits, precision_hint); never throws on per-sample errors.
Report verify_entry(const CorpusEntry& e, const PrecisionContext& ctx,
                    uint64_t seed = kDefaultSeed);

struct CorpusSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int quarantined = 0;
  int expected_fail_ok = 0;   // negative controls that did fail
  int expected_fail_bad = 0;  // negative controls that unexpectedly passed
  bool success = false;       // no verified-status failure, controls behaved
};

// Loads corpus/<section>/<id>.json recursively, verifies with up to
// `parallelism` workers, returns reports ordered by id.
std::pair<std::vector<Report>, CorpusSummary> verify_corpus(const std::string& path,
                                                            const PrecisionContext& ctx,
                                                            int parallelism,
                                                            uint64_t seed = kDefaultSeed);

// Deterministic in-domain bindings for a parametric entry. EmptyDomain if
// the descriptor admits no points.
std::vector<Binding> sample_parametric(const CorpusEntry& e, uint64_t seed, int count);

const char* status_name(EntryStatus s);

}  // namespace li2lab

#endif
