#include "li2lab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace li2lab {

namespace {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// uniform rational in [0,1] with denominator 2^20
mpq_class unit_rational(uint64_t& state) {
  return mpq_class(static_cast<long>(splitmix64(state) % 1048577UL), 1048576L);
}

struct Domain {
  enum class Kind { interval, rect, disk } kind;
  mpq_class a, b, c, d;  // interval: (a,b); rect: (a,b)x(c,d); disk: center (a,c), radius b
};

Domain parse_domain(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  auto nums = [&s](std::string_view head, size_t want) -> std::optional<std::vector<mpq_class>> {
    if (s.rfind(head, 0) != 0 || s.back() != ')') return std::nullopt;
    std::string inner = s.substr(head.size(), s.size() - head.size() - 1);
    std::vector<mpq_class> out;
    std::stringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      mpq_class q;
      if (tok.find('.') != std::string::npos) {
        auto dot = tok.find('.');
        std::string digits = tok.substr(0, dot) + tok.substr(dot + 1);
        bool neg = !digits.empty() && digits[0] == '-';
        mpz_class den(1);
        for (size_t i = dot + 1; i < tok.size(); ++i) den *= 10;
        q = mpq_class(mpz_class(digits), den);
        (void)neg;
      } else {
        q = mpq_class(tok);
      }
      q.canonicalize();
      out.push_back(q);
    }
    if (out.size() != want) throw SyntaxError(0, std::string(head) + "...)");
    return out;
  };
  if (auto v = nums("interval(", 2)) return Domain{Domain::Kind::interval, (*v)[0], (*v)[1]};
  if (auto v = nums("rect(", 4))
    return Domain{Domain::Kind::rect, (*v)[0], (*v)[1], (*v)[2], (*v)[3]};
  if (auto v = nums("disk(", 3)) return Domain{Domain::Kind::disk, (*v)[0], (*v)[2], (*v)[1]};
  throw SyntaxError(0, "interval(a,b), rect(a,b,c,d) or disk(cx,cy,r)");
}

// boundary-avoiding margin
const mpq_class kMargin(1, 100);

Complex domain_point(const Domain& d, uint64_t& state) {
  switch (d.kind) {
    case Domain::Kind::interval: {
      mpq_class lo = d.a + kMargin, hi = d.b - kMargin;
      if (!(lo < hi)) throw EmptyDomain("interval too narrow for the sampling margin");
      mpq_class t = unit_rational(state);
      mpq_class v = lo + (hi - lo) * t;
      return Complex(Real(v));
    }
    case Domain::Kind::rect: {
      mpq_class alo = d.a + kMargin, ahi = d.b - kMargin;
      mpq_class blo = d.c + kMargin, bhi = d.d - kMargin;
      if (!(alo < ahi) || !(blo < bhi))
        throw EmptyDomain("rect too narrow for the sampling margin");
      mpq_class tx = unit_rational(state), ty = unit_rational(state);
      return Complex(Real(mpq_class(alo + (ahi - alo) * tx)),
                     Real(mpq_class(blo + (bhi - blo) * ty)));
    }
    case Domain::Kind::disk: {
      mpq_class r = d.b - kMargin;
      if (!(r > 0)) throw EmptyDomain("disk too small for the sampling margin");
      // rejection from the bounding square, deterministic
      for (int tries = 0; tries < 512; ++tries) {
        mpq_class tx = unit_rational(state) * 2 - 1;
        mpq_class ty = unit_rational(state) * 2 - 1;
        if (tx * tx + ty * ty < 1) {
          return Complex(Real(mpq_class(d.a + r * tx)), Real(mpq_class(d.c + r * ty)));
        }
      }
      throw EmptyDomain("disk sampling failed");
    }
  }
  throw EmptyDomain("unknown domain");
}

EntryStatus status_from_string(const std::string& s) {
  if (s == "verified") return EntryStatus::verified;
  if (s == "quarantined") return EntryStatus::quarantined;
  if (s == "expected_fail") return EntryStatus::expected_fail;
  throw DomainError("corpus entry: unknown status '" + s + "'");
}

}  // namespace

const char* status_name(EntryStatus s) {
  switch (s) {
    case EntryStatus::verified: return "verified";
    case EntryStatus::quarantined: return "quarantined";
    case EntryStatus::expected_fail: return "expected_fail";
  }
  return "?";
}

CorpusEntry entry_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CorpusEntry e;
  e.id = j.at("id").get<std::string>();
  e.lhs = j.at("lhs").get<std::string>();
  e.rhs = j.at("rhs").get<std::string>();
  if (j.contains("params"))
    for (const auto& p : j.at("params"))
      e.params.push_back(
          ParamSpec{p.at("name").get<std::string>(), p.at("domain").get<std::string>()});
  if (j.contains("samples"))
    for (const auto& s : j.at("samples")) {
      std::map<std::string, std::string> m;
      for (auto it = s.begin(); it != s.end(); ++it) m[it.key()] = it.value().get<std::string>();
      e.samples.push_back(std::move(m));
    }
  if (j.contains("sampling")) {
    const auto& s = j.at("sampling");
    if (s.contains("count")) e.sampling.count = s.at("count").get<int>();
    if (s.contains("seed")) e.sampling.seed = s.at("seed").get<uint64_t>();
    if (s.contains("constraints"))
      for (const auto& c : s.at("constraints"))
        e.sampling.constraints.push_back(c.get<std::string>());
  }
  if (j.contains("precision_hint")) e.precision_hint = j.at("precision_hint").get<int>();
  if (j.contains("status")) e.status = status_from_string(j.at("status").get<std::string>());
  if (j.contains("paper_ref")) e.paper_ref = j.at("paper_ref").get<std::string>();
  if (j.contains("branch_overrides") && !j.at("branch_overrides").is_null()) {
    const auto& b = j.at("branch_overrides");
    if (b.contains("im_shifts"))
      for (const auto& sh : b.at("im_shifts"))
        e.branch_overrides.im_shifts.push_back(
            BranchOverrides::ImShift{sh.at("param").get<std::string>(),
                                     sh.value("eps_exp", -30), sh.value("sign", 1)});
    if (b.contains("conjugate_sqrt_sites"))
      for (const auto& s : b.at("conjugate_sqrt_sites"))
        e.branch_overrides.conjugate_sqrt_sites.push_back(s.get<int>());
  }
  // parse both sides now so malformed entries fail loudly at load time
  (void)parse(e.lhs);
  (void)parse(e.rhs);
  return e;
}

CorpusEntry entry_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("entry_from_file: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  CorpusEntry e = entry_from_json_text(ss.str());
  auto parent = std::filesystem::path(path).parent_path().filename().string();
  e.section = parent;
  return e;
}

std::vector<Binding> sample_parametric(const CorpusEntry& e, uint64_t seed, int count) {
  std::vector<Binding> out;
  PrecisionContext probe_ctx(20, 10);

  // explicit samples pass through first (binding values are expressions)
  for (const auto& s : e.samples) {
    Binding b;
    for (const auto& [k, v] : s) b[k] = evaluate(parse(v), {}, PrecisionContext(140, 15));
    out.push_back(std::move(b));
  }
  if (e.params.empty() || count <= static_cast<int>(out.size())) {
    if (e.params.empty() && out.empty()) out.push_back({});
    return out;
  }

  std::vector<std::pair<std::string, Domain>> domains;
  for (const auto& p : e.params) domains.emplace_back(p.name, parse_domain(p.domain));
  std::vector<ExprPtr> constraints;
  for (const auto& c : e.sampling.constraints) constraints.push_back(parse(c));

  uint64_t state = seed ^ std::hash<std::string>{}(e.id);
  int needed = count - static_cast<int>(out.size());
  int guard = 0;
  while (needed > 0) {
    if (++guard > 20000) throw EmptyDomain("sample_parametric: constraints rejected everything");
    Binding b;
    for (const auto& [name, dom] : domains) b[name] = domain_point(dom, state);
    bool ok = true;
    for (const auto& c : constraints) {
      Complex v = evaluate(c, b, probe_ctx);
      if (v.re().sign() < 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    out.push_back(std::move(b));
    --needed;
  }
  return out;
}

Report verify_entry(const CorpusEntry& e, const PrecisionContext& ctx, uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  int digits = std::max(ctx.digits, e.precision_hint);
  PrecisionContext ectx(digits, ctx.guard);

  Report rep;
  rep.id = e.id;
  rep.status = e.status;
  rep.tolerance = [&] {
    ScopedPrecision scope(ectx);
    return pow10(-(digits - 10));
  }();

  ExprPtr lhs = parse(e.lhs);
  ExprPtr rhs = parse(e.rhs);
  EvalOptions opts;
  for (int s : e.branch_overrides.conjugate_sqrt_sites) opts.conjugate_sqrt_sites.insert(s);

  uint64_t use_seed = e.sampling.seed.value_or(seed);
  std::vector<Binding> bindings;
  try {
    bindings = sample_parametric(e, use_seed, std::max(e.sampling.count,
                                                       static_cast<int>(e.samples.size())));
  } catch (const Error& err) {
    rep.samples.push_back(SampleOutcome{"<sampling>", Real(0), err.what()});
    rep.pass = false;
    rep.max_residual = Real(0);
    return rep;
  }

  ScopedPrecision scope(ectx);
  Real max_resid(0);
  bool any_error = false;
  for (auto& b : bindings) {
    // cut-side override: nudge the parameter off the real axis
    for (const auto& sh : e.branch_overrides.im_shifts) {
      auto it = b.find(sh.param);
      if (it != b.end()) {
        Real eps = pow10(sh.eps_exp);
        it->second = Complex(it->second.re(),
                             it->second.im() + (sh.sign < 0 ? -eps : eps));
      }
    }
    std::string desc;
    for (const auto& [k, v] : b) {
      if (!desc.empty()) desc += ", ";
      desc += k + " = " + v.to_decimal(8);
    }
    if (desc.empty()) desc = "(no parameters)";
    SampleOutcome oc{desc, Real(0), ""};
    try {
      Complex l = evaluate(lhs, b, ectx, opts);
      Complex r = evaluate(rhs, b, ectx, opts);
      oc.residual = abs(l - r);
      if (oc.residual > max_resid) max_resid = oc.residual;
    } catch (const Error& err) {
      oc.error = err.what();
      any_error = true;
    }
    rep.samples.push_back(std::move(oc));
  }
  rep.max_residual = max_resid;
  rep.pass = !any_error && !rep.samples.empty() && max_resid < rep.tolerance;
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::pair<std::vector<Report>, CorpusSummary> verify_corpus(const std::string& path,
                                                            const PrecisionContext& ctx,
                                                            int parallelism, uint64_t seed) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  if (fs::is_regular_file(path)) {
    files.push_back(path);
  } else if (fs::is_directory(path)) {
    for (const auto& p : fs::recursive_directory_iterator(path))
      if (p.is_regular_file() && p.path().extension() == ".json" &&
          p.path().string().find(".notes.") == std::string::npos)
        files.push_back(p.path().string());
  } else {
    throw DomainError("verify_corpus: no such path " + path);
  }
  std::sort(files.begin(), files.end());

  std::vector<CorpusEntry> entries;
  std::vector<Report> io_failures;
  for (const auto& f : files) {
    try {
      entries.push_back(entry_from_file(f));
    } catch (const std::exception& err) {
      Report r;
      r.id = f;
      r.pass = false;
      r.samples.push_back(SampleOutcome{"<load>", Real(0), err.what()});
      io_failures.push_back(std::move(r));
    }
  }

  std::vector<Report> reports(entries.size());
  std::atomic<size_t> next{0};
  int workers = std::max(1, parallelism);
  auto run = [&] {
    for (;;) {
      size_t k = next.fetch_add(1);
      if (k >= entries.size()) return;
      reports[k] = verify_entry(entries[k], ctx, seed);
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }

  for (auto& r : io_failures) reports.push_back(std::move(r));
  std::sort(reports.begin(), reports.end(),
            [](const Report& a, const Report& b) { return a.id < b.id; });

  CorpusSummary sum;
  sum.total = static_cast<int>(reports.size());
  bool any_gate_failure = !io_failures.empty();
  for (const auto& r : reports) {
    switch (r.status) {
      case EntryStatus::verified:
        if (r.pass) ++sum.passed;
        else {
          ++sum.failed;
          any_gate_failure = true;
        }
        break;
      case EntryStatus::quarantined:
        ++sum.quarantined;
        break;
      case EntryStatus::expected_fail:
        if (!r.pass) ++sum.expected_fail_ok;
        else {
          ++sum.expected_fail_bad;
          any_gate_failure = true;
        }
        break;
    }
  }
  sum.success = !any_gate_failure;
  return {reports, sum};
}

}  // namespace li2lab
