#include "zdhom/run.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zdhom/analysis.hpp"
#include "zdhom/complex.hpp"
#include "zdhom/errors.hpp"
#include "zdhom/formulas.hpp"
#include "zdhom/homology.hpp"
#include "zdhom/ring.hpp"
#include "zdhom/ring_spec.hpp"

namespace zdhom {

namespace {

using json = nlohmann::ordered_json;
using steady = std::chrono::steady_clock;

long long ms_since(steady::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(steady::now() - t0).count();
}

bool small_prime(unsigned long long p) {
  if (p < 2) return false;
  for (unsigned long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Coeff parse_coeff(const std::string& s) {
  if (s == "Z") return Coeff::integers();
  if (s == "Q") return Coeff::rationals();
  if (s.size() > 1 && s[0] == 'F') {
    unsigned long long p = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw invalid_parameter("bad coefficient field '" + s + "' (expected Z, Q, or F<p>)");
      p = p * 10 + static_cast<unsigned long long>(s[i] - '0');
      if (p > 1'000'000) throw invalid_parameter("coefficient characteristic too large");
    }
    if (!small_prime(p))
      throw invalid_parameter("coefficient field F" + std::to_string(p) + " needs a prime");
    return Coeff::mod(static_cast<unsigned>(p));
  }
  throw invalid_parameter("bad coefficient field '" + s + "' (expected Z, Q, or F<p>)");
}

std::string coeff_string(Coeff c) {
  switch (c.field) {
    case Coeff::Field::Z: return "Z";
    case Coeff::Field::Q: return "Q";
    case Coeff::Field::Fp: return "F" + std::to_string(c.p);
  }
  return "?";
}

json ring_json(const std::string& normalized, const Ring& ring) {
  json factors = json::array();
  for (const Ring& f : decompose_local(ring)) {
    const std::size_t u = units(f).size();
    factors.push_back(json{{"order", f.order}, {"units", u}, {"field", u + 1 == f.order}});
  }
  return json{{"spec", normalized}, {"order", ring.order}, {"factors", std::move(factors)}};
}

// Dimensions worth reporting: nonzero rank or nonzero torsion.
std::set<int> interesting_dims(const HomologyProfile& h) {
  std::set<int> dims;
  for (const auto& [d, r] : h.rank)
    if (r) dims.insert(d);
  for (const auto& [d, t] : h.torsion)
    if (!t.empty()) dims.insert(d);
  return dims;
}

json torsion_json(const HomologyProfile& h, int dim) {
  json t = json::array();
  auto it = h.torsion.find(dim);
  if (it != h.torsion.end())
    for (const Int& f : it->second) t.push_back(f.str());
  return t;
}

json profile_json(const HomologyProfile& h) {
  json arr = json::array();
  for (int d : interesting_dims(h)) {
    json e;
    e["dim"] = d;
    e["rank"] = h.rank.count(d) ? h.rank.at(d) : 0;
    e["torsion"] = torsion_json(h, d);
    arr.push_back(std::move(e));
  }
  return arr;
}

json formula_profile_json(const RankVector& ranks) {
  json arr = json::array();
  for (const auto& [d, r] : ranks) {
    json e;
    e["dim"] = d;
    e["rank"] = r;
    e["torsion"] = json::array();
    arr.push_back(std::move(e));
  }
  return arr;
}

// The formula side is inherently reduced; shift dim 0 when the caller wants
// unreduced output (the complex of a non-field always has a vertex).
RankVector formula_ranks_for_output(const Ring& ring, bool reduced) {
  RankVector r = k_ranks(ring);
  if (!reduced && units(ring).size() + 1 != ring.order) r[0] += 1;
  return r;
}

// Reduced nonzero rank map of a directly computed profile.
RankVector reduced_nonzero(const HomologyProfile& h, bool computed_reduced, bool nonvoid) {
  RankVector m;
  for (const auto& [d, r] : h.rank)
    if (r) m[d] = r;
  if (!computed_reduced && nonvoid) {
    auto it = m.find(0);
    if (it != m.end()) {
      if (--it->second == 0) m.erase(it);
    }
  }
  return m;
}

struct OutputSink {
  std::string path;  // empty: write to the session stream
  std::ostream& fallback;

  void write(const std::string& text) const {
    if (path.empty()) {
      fallback << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw io_error("write to '" + path + "' failed");
  }
};

json result_skeleton(const std::string& method, std::size_t budget, bool exceeded) {
  json r;
  r["ring"] = nullptr;
  r["method"] = method;
  r["homology"] = nullptr;
  r["cm"] = nullptr;
  r["surface"] = nullptr;
  r["timing_ms"] = nullptr;
  r["budget"] = json{{"faces", budget}, {"exceeded", exceeded}};
  return r;
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

std::string ring_text(const json& ringj) {
  if (ringj.is_null()) return "ring: (not built)\n";
  std::ostringstream s;
  s << "ring " << ringj["spec"].get<std::string>() << " (order " << ringj["order"]
    << "); local factors:";
  for (const auto& f : ringj["factors"]) {
    s << " " << f["order"] << " [" << f["units"] << " units"
      << (f["field"].get<bool>() ? ", field" : "") << "]";
  }
  s << "\n";
  return s.str();
}

std::string homology_text(const json& result, bool reduced, Coeff coeff) {
  std::ostringstream s;
  s << ring_text(result["ring"]);
  const json& h = result["homology"];
  s << "homology (" << (reduced ? "reduced" : "unreduced") << ", " << coeff_string(coeff)
    << " coefficients, method " << result["method"].get<std::string>() << "):\n";
  if (h.is_null() || h.empty()) {
    s << "  all groups zero\n";
  } else {
    for (const auto& e : h) {
      if (e.contains("direct")) {
        s << "  dim " << e["dim"] << ": direct rank " << e["direct"]["rank"] << " torsion "
          << e["direct"]["torsion"].dump() << " vs formula rank " << e["formula"]["rank"]
          << "\n";
      } else {
        s << "  H_" << e["dim"] << ": rank " << e["rank"];
        if (!e["torsion"].empty()) {
          s << ", torsion";
          for (const auto& t : e["torsion"]) s << " " << t.get<std::string>();
        }
        s << "\n";
      }
    }
  }
  if (result["budget"]["exceeded"].get<bool>()) s << "budget: exceeded\n";
  return s.str();
}

std::string tag_string(CMClassification::Tag t) {
  switch (t) {
    case CMClassification::Tag::IsField: return "IsField";
    case CMClassification::Tag::TwoFields: return "TwoFields";
    case CMClassification::Tag::Z2X2TimesField: return "Z2X2TimesField";
    case CMClassification::Tag::LocalLargeSocle: return "LocalLargeSocle";
    case CMClassification::Tag::BorderlineSocle2: return "BorderlineSocle2";
    case CMClassification::Tag::NotCM: return "NotCM";
  }
  return "?";
}

json cm_json(const CMClassification& c) {
  json j;
  j["tag"] = tag_string(c.tag);
  j["detail"] = c.detail;
  j["shape_verdict"] = c.shape_verdict ? json(*c.shape_verdict) : json(nullptr);
  auto cm = c.is_cm();
  j["is_cm"] = cm ? json(*cm) : json(nullptr);
  if (c.reisner_result) {
    const CMVerdict& v = *c.reisner_result;
    json r;
    r["is_cm"] = v.is_cm;
    r["coefficients"] = coeff_string(v.coefficients);
    if (v.witness) {
      r["witness"] = json{{"face", v.witness->face_labels},
                          {"dim", v.witness->dim},
                          {"rank", v.witness->rank}};
    } else {
      r["witness"] = nullptr;
    }
    j["reisner"] = std::move(r);
  } else {
    j["reisner"] = nullptr;
  }
  j["reisner_skipped"] = c.reisner_skipped;
  return j;
}

std::string cm_text(const json& result) {
  std::ostringstream s;
  s << ring_text(result["ring"]);
  const json& c = result["cm"];
  s << "cm classification: " << c["tag"].get<std::string>() << "\n  "
    << c["detail"].get<std::string>() << "\n";
  s << "is_cm: " << (c["is_cm"].is_null() ? "undetermined" : c["is_cm"].dump()) << "\n";
  if (!c["reisner"].is_null()) {
    const json& r = c["reisner"];
    s << "link condition (" << r["coefficients"].get<std::string>() << "): "
      << (r["is_cm"].get<bool>() ? "holds" : "fails");
    if (!r["witness"].is_null()) {
      s << " at face {";
      bool first = true;
      for (const auto& l : r["witness"]["face"]) {
        if (!first) s << ", ";
        first = false;
        s << l.get<std::string>();
      }
      s << "} with H_" << r["witness"]["dim"] << " of rank " << r["witness"]["rank"];
    }
    s << "\n";
  } else if (c["reisner_skipped"].get<bool>()) {
    s << "link condition: skipped (budget)\n";
  }
  return s.str();
}

json surface_json(const SurfaceObstruction& s) {
  return json{{"possible", s.possible}, {"reason", s.reason}, {"evidence", s.evidence}};
}

std::string surface_text(const json& result) {
  std::ostringstream s;
  s << ring_text(result["ring"]);
  const json& f = result["surface"];
  s << "closed surface: " << (f["possible"].get<bool>() ? "possible" : "impossible") << "\n  "
    << f["reason"].get<std::string>() << "\n";
  for (const auto& e : f["evidence"]) s << "  evidence: " << e.get<std::string>() << "\n";
  return s.str();
}

struct CommonOpts {
  std::string spec;
  std::string method = "both";
  std::string coeff = "Z";
  bool unreduced = false;
  std::size_t budget = 0;  // filled with the default at setup
  bool text = false;
  std::string out_path;
};

int cmd_homology(const CommonOpts& o, std::ostream& out, std::ostream& err) {
  const Coeff coeff = parse_coeff(o.coeff);
  const bool reduced = !o.unreduced;
  json result = result_skeleton(o.method, o.budget, false);
  json timing = json::object();
  int rc = 0;
  std::string diag;

  auto t0 = steady::now();
  RingSpec spec = parse_ring_spec(o.spec);
  const std::string norm = normalize(spec);
  timing["parse"] = ms_since(t0);

  t0 = steady::now();
  Ring ring = build_ring(spec);
  result["ring"] = ring_json(norm, ring);
  timing["build"] = ms_since(t0);

  t0 = steady::now();
  try {
    if (o.method == "formula") {
      result["homology"] = formula_profile_json(formula_ranks_for_output(ring, reduced));
    } else {
      SimplicialComplex k = k_complex(ring, o.budget);
      HomologyProfile h = homology(k, reduced, coeff, o.budget);
      if (o.method == "direct") {
        result["homology"] = profile_json(h);
      } else {  // both
        RankVector direct = reduced_nonzero(h, reduced, !k.is_void());
        RankVector formula = k_ranks(ring);
        const bool agree = direct == formula && h.torsion_free();
        if (agree) {
          result["homology"] = profile_json(h);
        } else {
          json diff = json::array();
          std::set<int> dims;
          for (const auto& [d, r] : direct) dims.insert(d);
          for (const auto& [d, r] : formula) dims.insert(d);
          for (const auto& [d, t] : h.torsion)
            if (!t.empty()) dims.insert(d);
          for (int d : dims) {
            json e;
            e["dim"] = d;
            e["direct"] = json{{"rank", direct.count(d) ? direct.at(d) : 0},
                               {"torsion", torsion_json(h, d)}};
            e["formula"] = json{{"rank", formula.count(d) ? formula.at(d) : 0}};
            diff.push_back(std::move(e));
          }
          result["homology"] = std::move(diff);
          rc = 4;
          diag = "cross-check disagreement between direct and formula ranks for " + norm;
        }
      }
    }
  } catch (const budget_exceeded& e) {
    result["budget"]["exceeded"] = true;
    rc = 3;
    diag = e.what();
  }
  timing["homology"] = ms_since(t0);
  result["timing_ms"] = std::move(timing);

  OutputSink sink{o.out_path, out};
  sink.write(o.text ? homology_text(result, reduced, coeff) : render_json(result));
  if (rc) err << "error: " << diag << "\n";
  return rc;
}

int cmd_cm(const CommonOpts& o, std::ostream& out, std::ostream& err) {
  const Coeff coeff = parse_coeff(o.coeff);
  json result = result_skeleton("direct", o.budget, false);
  json timing = json::object();
  int rc = 0;
  std::string diag;

  auto t0 = steady::now();
  RingSpec spec = parse_ring_spec(o.spec);
  const std::string norm = normalize(spec);
  timing["parse"] = ms_since(t0);

  t0 = steady::now();
  Ring ring = build_ring(spec);
  result["ring"] = ring_json(norm, ring);
  timing["build"] = ms_since(t0);

  t0 = steady::now();
  CMClassification c = classify_cm(ring, coeff, o.budget);
  if (c.reisner_skipped) {
    result["budget"]["exceeded"] = true;
    rc = 3;
    diag = "face budget exceeded while cross-checking the link condition";
  }
  result["cm"] = cm_json(c);
  timing["cm"] = ms_since(t0);
  result["timing_ms"] = std::move(timing);

  OutputSink sink{o.out_path, out};
  sink.write(o.text ? cm_text(result) : render_json(result));
  if (rc) err << "error: " << diag << "\n";
  return rc;
}

int cmd_surface(const CommonOpts& o, std::ostream& out, std::ostream& err) {
  json result = result_skeleton("direct", o.budget, false);
  json timing = json::object();
  int rc = 0;
  std::string diag;

  auto t0 = steady::now();
  RingSpec spec = parse_ring_spec(o.spec);
  const std::string norm = normalize(spec);
  timing["parse"] = ms_since(t0);

  t0 = steady::now();
  Ring ring = build_ring(spec);
  result["ring"] = ring_json(norm, ring);
  timing["build"] = ms_since(t0);

  t0 = steady::now();
  try {
    result["surface"] = surface_json(surface_obstruction(ring, o.budget));
  } catch (const budget_exceeded& e) {
    result["budget"]["exceeded"] = true;
    rc = 3;
    diag = e.what();
  }
  timing["surface"] = ms_since(t0);
  result["timing_ms"] = std::move(timing);

  OutputSink sink{o.out_path, out};
  sink.write(o.text ? surface_text(result) : render_json(result));
  if (rc) err << "error: " << diag << "\n";
  return rc;
}

int cmd_export(const CommonOpts& o, const std::string& target, std::ostream& out,
               std::ostream& /*err*/) {
  RingSpec spec = parse_ring_spec(o.spec);
  Ring ring = build_ring(spec);
  SimplicialComplex k =
      target == "k0" ? k0_complex(ring, o.budget) : k_complex(ring, o.budget);
  std::ostringstream body;
  export_facets(k, body);
  OutputSink sink{o.out_path, out};
  sink.write(body.str());
  return 0;
}

// ---- corpus ----------------------------------------------------------------

struct CorpusCheck {
  bool ran = false;
  bool ok = true;
  std::string note;
};

struct CorpusItem {
  std::string spec;
  CorpusCheck homology_check, cm_check, surface_check_;
  std::string error;

  bool ok() const {
    return error.empty() && homology_check.ok && cm_check.ok && surface_check_.ok;
  }
};

std::string rank_vector_string(const RankVector& v) {
  std::string s = "{";
  bool first = true;
  for (const auto& [d, r] : v) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(d) + ": " + std::to_string(r);
  }
  return s + "}";
}

void run_corpus_item(CorpusItem& item, const std::string& only, std::size_t budget) {
  try {
    Ring ring = build_ring(parse_ring_spec(item.spec));
    if (only.empty() || only == "homology") {
      auto& c = item.homology_check;
      c.ran = true;
      SimplicialComplex k = k_complex(ring, budget);
      HomologyProfile h = homology(k, true, Coeff::integers(), budget);
      RankVector direct = reduced_nonzero(h, true, !k.is_void());
      RankVector formula = k_ranks(ring);
      if (!h.torsion_free()) {
        c.ok = false;
        c.note = "direct homology has torsion";
      } else if (direct != formula) {
        c.ok = false;
        c.note = "direct " + rank_vector_string(direct) + " vs formula " +
                 rank_vector_string(formula);
      }
    }
    if (only.empty() || only == "cm") {
      auto& c = item.cm_check;
      c.ran = true;
      CMClassification cls = classify_cm(ring, Coeff::rationals(), budget);
      if (cls.reisner_skipped) {
        c.note = "link-condition cross-check skipped (budget)";
      } else {
        auto implied = cls.is_cm();
        if (!implied || *implied != cls.reisner_result->is_cm) {
          c.ok = false;
          c.note = "classification tag " + tag_string(cls.tag) +
                   " disagrees with the link condition";
        }
      }
    }
    if (only.empty() || only == "surface") {
      auto& c = item.surface_check_;
      c.ran = true;
      SurfaceObstruction s = surface_obstruction(ring, budget);
      if (s.possible) {
        c.ok = false;
        c.note = "claims a closed surface is possible";
      }
    }
  } catch (const std::exception& e) {
    item.error = e.what();
  }
}

std::vector<std::string> corpus_specs(unsigned long long max_n) {
  std::vector<std::string> specs;
  for (unsigned long long n = 6; n <= max_n; ++n) specs.push_back("Z" + std::to_string(n));
  const char* named[] = {
      "Z2 x Z2",
      "Z2 x Z3",
      "Z4 x Z3",
      "Z4 x Z4",
      "Z4 x Z9",
      "Z8 x Z3",
      "Z9 x Z6",
      "Z25 x Z2",
      "Z2 x Z2 x Z2",
      "Z2 x Z2 x Z3",
      "Z3 x Z3 x Z3",
      "Z2 x Z3 x Z5",
      "Z2 x Z2 x Z2 x Z3",
      "GF(2^2)",
      "GF(2^2) x Z3",
      "GF(2^2) x GF(3^2)",
      "GF(2^3) x Z2",
      "F2[x]/(x^3)",
      "F2[x]/(x^4)",
      "F2[x]/(x^5)",
      "F3[x]/(x^2)",
      "F2[x,y]/(x^2, y^2)",
      "F2[x,y]/(x^2, x y, y^2)",
      "F2[x]/(x^2) x Z3",
  };
  specs.insert(specs.end(), std::begin(named), std::end(named));
  return specs;
}

std::string check_string(const CorpusCheck& c) {
  if (!c.ran) return "-";
  if (c.ok) return c.note.empty() ? "ok" : "ok (" + c.note + ")";
  return "FAIL: " + c.note;
}

int cmd_corpus(unsigned long long max_n, const std::string& only, std::size_t budget,
               bool text, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  if (max_n < 6) throw invalid_parameter("--max-n must be at least 6");
  std::vector<std::string> specs = corpus_specs(max_n);
  std::vector<CorpusItem> items(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) items[i].spec = specs[i];

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < static_cast<long long>(items.size()); ++i)
    run_corpus_item(items[static_cast<std::size_t>(i)], only, budget);

  std::size_t failures = 0;
  for (const auto& it : items)
    if (!it.ok()) ++failures;

  std::string rendered;
  if (text) {
    std::ostringstream s;
    for (const auto& it : items) {
      s << it.spec;
      for (std::size_t pad = it.spec.size(); pad < 24; ++pad) s << ' ';
      if (!it.error.empty()) {
        s << " ERROR: " << it.error << "\n";
        continue;
      }
      s << " homology=" << check_string(it.homology_check)
        << " cm=" << check_string(it.cm_check)
        << " surface=" << check_string(it.surface_check_) << "\n";
    }
    s << "corpus: " << items.size() << " rings, " << failures << " failures\n";
    rendered = s.str();
  } else {
    json j;
    j["total"] = items.size();
    j["failures"] = failures;
    json arr = json::array();
    for (const auto& it : items) {
      json e;
      e["ring"] = it.spec;
      if (!it.error.empty()) e["error"] = it.error;
      e["homology"] = check_string(it.homology_check);
      e["cm"] = check_string(it.cm_check);
      e["surface"] = check_string(it.surface_check_);
      e["ok"] = it.ok();
      arr.push_back(std::move(e));
    }
    j["items"] = std::move(arr);
    rendered = render_json(j);
  }
  OutputSink sink{out_path, out};
  sink.write(rendered);
  if (failures) {
    err << "error: " << failures << " corpus item(s) failed\n";
    return 4;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"homology of clique complexes of zero-divisor graphs of finite "
               "commutative rings"};
  app.name("zdhom");
  app.require_subcommand(1);

  CommonOpts hom_o, cm_o, surf_o, exp_o;
  hom_o.budget = cm_o.budget = surf_o.budget = exp_o.budget = default_face_budget();
  cm_o.coeff = "Q";
  std::string export_target = "k";
  unsigned long long max_n = 120;
  std::string corpus_only;
  std::size_t corpus_budget = default_face_budget();
  bool corpus_text = false;
  std::string corpus_out;

  const std::string spec_help = "ring spec, e.g. \"Z36\", \"Z4 x GF(9)\", \"F2[x]/(x^3 + x + 1)\"";

  auto add_output_flags = [](CLI::App* c, CommonOpts& o) {
    c->add_flag("--text,!--json", o.text, "human-readable output instead of JSON");
    c->add_option("--out", o.out_path, "write the report to this file instead of stdout");
    c->add_option("--budget", o.budget, "maximum number of faces to enumerate")
        ->capture_default_str();
  };

  CLI::App* hom = app.add_subcommand(
      "homology", "compute reduced or unreduced homology directly, by formula, or both");
  hom->add_option("spec", hom_o.spec, spec_help)->required();
  hom->add_option("--method", hom_o.method, "direct | formula | both")
      ->check(CLI::IsMember({"direct", "formula", "both"}))
      ->capture_default_str();
  hom->add_option("--coeff", hom_o.coeff, "coefficients: Z, Q, or F<p>")
      ->capture_default_str();
  hom->add_flag("--unreduced,!--reduced", hom_o.unreduced,
                "use unreduced instead of reduced homology");
  add_output_flags(hom, hom_o);

  CLI::App* cm = app.add_subcommand(
      "cm", "classify Cohen-Macaulayness and cross-check the link condition");
  cm->add_option("spec", cm_o.spec, spec_help)->required();
  cm->add_option("--coeff", cm_o.coeff, "field coefficients: Q or F<p>")
      ->capture_default_str();
  add_output_flags(cm, cm_o);

  CLI::App* surf = app.add_subcommand(
      "surface", "explain why the complex cannot triangulate a closed surface");
  surf->add_option("spec", surf_o.spec, spec_help)->required();
  add_output_flags(surf, surf_o);

  CLI::App* corpus = app.add_subcommand(
      "corpus", "self-test: formula vs direct homology, CM, and surface checks over a "
                "ring corpus");
  corpus->add_option("--max-n", max_n, "largest n for the Zn sweep")->capture_default_str();
  corpus->add_option("--only", corpus_only, "restrict to one check")
      ->check(CLI::IsMember({"homology", "cm", "surface"}));
  corpus->add_option("--budget", corpus_budget, "maximum number of faces to enumerate")
      ->capture_default_str();
  corpus->add_flag("--text,!--json", corpus_text, "human-readable output instead of JSON");
  corpus->add_option("--out", corpus_out, "write the report to this file instead of stdout");

  CLI::App* exp = app.add_subcommand("export", "write a complex as a facet-list file");
  exp->add_option("spec", exp_o.spec, spec_help)->required();
  exp->add_option("--target", export_target, "which complex: k (zero divisors) or k0")
      ->check(CLI::IsMember({"k", "k0"}))
      ->capture_default_str();
  exp->add_option("--out", exp_o.out_path, "write to this file instead of stdout");
  exp->add_option("--budget", exp_o.budget, "maximum number of faces to enumerate")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (hom->parsed()) return cmd_homology(hom_o, out, err);
    if (cm->parsed()) return cmd_cm(cm_o, out, err);
    if (surf->parsed()) return cmd_surface(surf_o, out, err);
    if (corpus->parsed())
      return cmd_corpus(max_n, corpus_only, corpus_budget, corpus_text, corpus_out, out, err);
    if (exp->parsed()) return cmd_export(exp_o, export_target, out, err);
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const invalid_parameter& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const too_large& e) {  // includes budget_exceeded
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const io_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace zdhom
