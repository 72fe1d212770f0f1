#pragma once

#include <algorithm>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "w0/geometry/verify.hpp"
#include "w0/io/json.hpp"

namespace w0::cli {

using io::json;

enum class Format { Text, Json };

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> all = {"validate", "cohomology", "dual-complex", "w0",
                                               "pair",     "product",    "kunneth",      "resolution",
                                               "betti-bound", "les",     "bound-check"};
  return all;
}

inline constexpr std::size_t kDefaultMaxDim = 32;

inline const char* kIntegralCaption = "nerve cohomology (= W_0 over Q; image in H^*(X,Z) may be smaller)";

struct JobRequest {
  std::string command;
  std::vector<std::string> inputs;
  Ring ring = Ring::Z;
  Format format = Format::Text;
  std::optional<std::string> output;
  /// User-supplied structure-sheaf dimensions for bound-check.
  std::vector<long long> h_struct;
  std::size_t max_dim = kDefaultMaxDim;
  unsigned jobs = 1;
};

enum Status : int { kOk = 0, kInputError = 1, kVerificationFailed = 2 };

struct Verdict {
  std::string name;
  bool pass;
  std::string detail;
};

struct Report {
  std::string command;
  std::vector<std::string> inputs;
  Ring ring = Ring::Z;
  std::string caption;
  /// Symbol printed before each degree, e.g. "KH" or "H".
  std::string symbol = "H";
  std::vector<CohomologyGroup> groups;
  std::vector<Verdict> verdicts;
  std::optional<json> document;
  std::string error;
  int status = kOk;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline io::Document load(const std::string& path) { return io::parse_text(read_file(path)); }

inline void check_dimension(const SemisimplicialSet& s, std::size_t max_dim) {
  if (s.dimension() > static_cast<std::ptrdiff_t>(max_dim))
    throw InvalidInput("complex has dimension " + std::to_string(s.dimension()) +
                       ", above the W0_MAX_DIM limit of " + std::to_string(max_dim));
}

/// The semisimplicial set a document stands for: itself, a dual complex, or a resolution nerve.
inline SemisimplicialSet complex_of(const io::Document& doc, std::size_t max_dim) {
  SemisimplicialSet s;
  if (auto* ss = std::get_if<SemisimplicialSet>(&doc)) s = *ss;
  else if (auto* cfg = std::get_if<SncConfiguration>(&doc)) s = dual_complex(*cfg);
  else if (auto* res = std::get_if<ResolutionData>(&doc)) s = resolution_nerve(*res);
  else throw InvalidInput(std::string("a '") + io::kind_name(doc) + "' document does not describe a complex");
  check_dimension(s, max_dim);
  return s;
}

template <class T>
T expect(const io::Document& doc, const char* what) {
  if (auto* v = std::get_if<T>(&doc)) return *v;
  throw InvalidInput(std::string("expected a '") + what + "' document, got '" + io::kind_name(doc) + "'");
}

inline void need_inputs(const JobRequest& req, std::size_t n) {
  if (req.inputs.size() != n)
    throw InvalidInput("'" + req.command + "' takes " + std::to_string(n) + " input file" + (n == 1 ? "" : "s"));
}

inline std::vector<long long> dims_of(const std::vector<CohomologyGroup>& groups) {
  std::vector<long long> d;
  for (const auto& g : groups) d.push_back(static_cast<long long>(g.free_rank));
  return d;
}

inline void add_degree_verdicts(Report& rep, const std::vector<DegreeVerdict>& degrees,
                                const std::string& label) {
  for (const auto& d : degrees)
    rep.verdicts.push_back({label + "^" + std::to_string(d.degree), d.pass,
                            "expected " + std::to_string(d.expected) + ", computed " + std::to_string(d.actual)});
}

inline void finish_verification(Report& rep) {
  bool ok = std::all_of(rep.verdicts.begin(), rep.verdicts.end(), [](const auto& v) { return v.pass; });
  rep.status = ok ? kOk : kVerificationFailed;
}

inline Report dispatch(const JobRequest& req) {
  Report rep;
  rep.command = req.command;
  rep.inputs = req.inputs;
  rep.ring = req.ring;
  const std::string& cmd = req.command;
  auto kh_caption = [&] {
    rep.symbol = "KH";
    if (req.ring == Ring::Z) rep.caption = kIntegralCaption;
  };

  if (cmd == "validate") {
    need_inputs(req, 1);
    const auto doc = load(req.inputs[0]);
    if (!std::holds_alternative<io::BoundsData>(doc) && !std::holds_alternative<PairData>(doc))
      (void)complex_of(doc, req.max_dim);
    rep.verdicts.push_back({"valid " + std::string(io::kind_name(doc)), true, ""});
  } else if (cmd == "cohomology") {
    need_inputs(req, 1);
    rep.groups = cohomology(complex_of(load(req.inputs[0]), req.max_dim), req.ring);
  } else if (cmd == "dual-complex") {
    need_inputs(req, 1);
    const auto s = dual_complex(expect<SncConfiguration>(load(req.inputs[0]), "snc"));
    check_dimension(s, req.max_dim);
    rep.document = io::to_json(s);
  } else if (cmd == "w0") {
    need_inputs(req, 1);
    const auto doc = load(req.inputs[0]);
    if (auto* p = std::get_if<PairData>(&doc)) {
      check_dimension(dual_complex(p->ambient), req.max_dim);
      rep.groups = khc_pair(*p, req.ring);
      kh_caption();
      rep.symbol = "KH_c";
    } else {
      rep.groups = kh_complete(complex_of(doc, req.max_dim), req.ring);
      kh_caption();
    }
  } else if (cmd == "pair") {
    need_inputs(req, 1);
    const auto p = expect<PairData>(load(req.inputs[0]), "pair");
    check_dimension(dual_complex(p.ambient), req.max_dim);
    rep.groups = khc_pair(p, req.ring);
    kh_caption();
    rep.symbol = "KH_c";
  } else if (cmd == "product") {
    need_inputs(req, 2);
    const auto prod = product_config(expect<SncConfiguration>(load(req.inputs[0]), "snc"),
                                     expect<SncConfiguration>(load(req.inputs[1]), "snc"));
    const auto s = dual_complex(prod);
    check_dimension(s, req.max_dim);
    rep.groups = kh_complete(s, req.ring);
    rep.document = io::to_json(prod);
    kh_caption();
  } else if (cmd == "kunneth") {
    need_inputs(req, 2);
    const auto a = expect<SncConfiguration>(load(req.inputs[0]), "snc");
    const auto b = expect<SncConfiguration>(load(req.inputs[1]), "snc");
    check_dimension(dual_complex(product_config(a, b)), req.max_dim);
    const auto k = kunneth_verify(a, b);
    rep.ring = Ring::Q;
    add_degree_verdicts(rep, k.degrees, "rank KH");
    finish_verification(rep);
  } else if (cmd == "resolution") {
    need_inputs(req, 1);
    const auto s = resolution_nerve(expect<ResolutionData>(load(req.inputs[0]), "resolution"));
    check_dimension(s, req.max_dim);
    rep.groups = kh_complete(s, req.ring);
    rep.document = io::to_json(s);
    kh_caption();
  } else if (cmd == "betti-bound") {
    need_inputs(req, 1);
    const auto res = expect<ResolutionData>(load(req.inputs[0]), "resolution");
    check_dimension(resolution_nerve(res), req.max_dim);
    const auto b = betti_bound_report(res);
    rep.ring = Ring::Q;
    rep.groups = b.kh;
    kh_caption();
    add_degree_verdicts(rep, b.degrees, "dim KH");
    finish_verification(rep);
  } else if (cmd == "les") {
    need_inputs(req, 1);
    const auto p = expect<PairData>(load(req.inputs[0]), "pair");
    check_dimension(dual_complex(p.ambient), req.max_dim);
    const auto les = les_verify(p);
    for (const auto& pos : les.positions) {
      std::string detail = pos.exact() ? "exact over Q and Z"
                                       : (pos.over_q.exact ? "" : "Q: " + pos.over_q.defect + " ") +
                                             (pos.over_z.exact ? "" : "Z: " + pos.over_z.defect);
      rep.verdicts.push_back({"exact at " + pos.term, pos.exact(), detail});
    }
    finish_verification(rep);
  } else if (cmd == "bound-check") {
    need_inputs(req, 1);
    const auto doc = load(req.inputs[0]);
    std::vector<long long> kh, h;
    if (auto* b = std::get_if<io::BoundsData>(&doc)) {
      kh = b->kh;
      h = req.h_struct.empty() ? b->h : req.h_struct;
    } else {
      kh = dims_of(kh_complete(complex_of(doc, req.max_dim), Ring::Q));
      h = req.h_struct;
    }
    const auto bc = bound_check(kh, h);
    rep.ring = Ring::Q;
    for (const auto& d : bc.degrees)
      rep.verdicts.push_back({"dim KH^" + std::to_string(d.degree) + " <= h^" + std::to_string(d.degree), d.pass,
                              std::to_string(d.actual) + " <= " + std::to_string(d.expected)});
    finish_verification(rep);
  } else {
    throw InvalidInput("unknown command '" + cmd + "'");
  }
  return rep;
}

}  // namespace detail

/// Runs one job. Input problems become status 1 with a diagnostic; failed
/// theorem-backed checks become status 2.
inline Report run(const JobRequest& req) {
  try {
    return detail::dispatch(req);
  } catch (const Error& e) {
    Report rep;
    rep.command = req.command;
    rep.inputs = req.inputs;
    rep.ring = req.ring;
    rep.error = e.what();
    rep.status = kInputError;
    return rep;
  }
}

/// Single-file commands given several files run once per file, up to
/// req.jobs at a time; reports come back in input order.
inline std::vector<Report> run_batch(const JobRequest& req) {
  const bool two_file = req.command == "product" || req.command == "kunneth";
  if (two_file || req.inputs.size() <= 1) return {run(req)};
  std::vector<Report> out(req.inputs.size());
  const std::size_t width = std::max(1u, req.jobs);
  for (std::size_t start = 0; start < req.inputs.size(); start += width) {
    std::vector<std::future<Report>> pending;
    for (std::size_t i = start; i < std::min(start + width, req.inputs.size()); ++i) {
      JobRequest one = req;
      one.inputs = {req.inputs[i]};
      pending.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred,
                                   [one] { return run(one); }));
    }
    for (std::size_t i = 0; i < pending.size(); ++i) out[start + i] = pending[i].get();
  }
  return out;
}

inline int combined_status(const std::vector<Report>& reports) {
  int s = kOk;
  for (const auto& r : reports) s = std::max(s, r.status);
  return s;
}

inline json to_json(const Report& rep) {
  json j{{"command", rep.command}, {"inputs", rep.inputs}, {"ring", to_string(rep.ring)}, {"status", rep.status}};
  if (!rep.error.empty()) j["error"] = rep.error;
  if (!rep.caption.empty()) j["caption"] = rep.caption;
  if (!rep.groups.empty()) {
    json groups = json::array();
    for (std::size_t n = 0; n < rep.groups.size(); ++n) {
      json torsion = json::array();
      for (const auto& t : rep.groups[n].torsion) torsion.push_back(t.str());
      groups.push_back({{"degree", n},
                        {"symbol", rep.symbol},
                        {"free_rank", rep.groups[n].free_rank},
                        {"torsion", torsion},
                        {"text", render(rep.groups[n], rep.ring)}});
    }
    j["groups"] = groups;
  }
  if (!rep.verdicts.empty()) {
    json v = json::array();
    for (const auto& x : rep.verdicts) v.push_back({{"check", x.name}, {"pass", x.pass}, {"detail", x.detail}});
    j["verdicts"] = v;
  }
  if (rep.document) j["document"] = *rep.document;
  return j;
}

inline std::string render_text(const Report& rep) {
  std::ostringstream os;
  if (!rep.error.empty()) {
    os << "error: " << rep.error << '\n';
    return os.str();
  }
  if (!rep.caption.empty()) os << rep.caption << '\n';
  for (std::size_t n = 0; n < rep.groups.size(); ++n)
    os << rep.symbol << '^' << n << " = " << render(rep.groups[n], rep.ring) << '\n';
  for (const auto& v : rep.verdicts)
    os << (v.pass ? "pass  " : "FAIL  ") << v.name << (v.detail.empty() ? "" : "  (" + v.detail + ")") << '\n';
  if (rep.document) os << rep.document->dump(2) << '\n';
  return os.str();
}

inline std::string render(const std::vector<Report>& reports, Format format) {
  if (format == Format::Json) {
    if (reports.size() == 1) return to_json(reports[0]).dump(2) + "\n";
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (const auto& r : reports) {
    if (reports.size() > 1) out += "== " + (r.inputs.empty() ? std::string() : r.inputs[0]) + "\n";
    out += render_text(r);
  }
  return out;
}

}  // namespace w0::cli
