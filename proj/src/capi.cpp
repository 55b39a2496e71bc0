#include "coxeter.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "coxeter/angles.hpp"
#include "coxeter/classify.hpp"
#include "coxeter/enumerate.hpp"
#include "coxeter/nerve.hpp"
#include "coxeter/parabolic.hpp"
#include "coxeter/system.hpp"
#include "coxeter/words.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;

struct cox_system {
  cox::CoxeterSystem sys;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cox_status fail(cox_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
cox_status wrap(Fn&& fn) {
  try {
    fn();
    return COX_OK;
  } catch (const cox::ParseError& e) {
    return fail(COX_ERR_PARSE, e.what());
  } catch (const cox::InvalidArgument& e) {
    return fail(COX_ERR_INVALID, e.what());
  } catch (const cox::CapExceeded& e) {
    return fail(COX_ERR_CAP, e.what());
  } catch (const cox::DomainError& e) {
    return fail(COX_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(COX_ERR_INTERNAL, e.what());
  }
}

long closure_cap_or_default(long cap) { return cap <= 0 ? cox::kDefaultClosureCap : cap; }

cox::GenSet parse_subset(const cox::CoxeterSystem& sys, const char* text) {
  cox::GenSet out;
  if (text == nullptr) return cox::GenSet::all(sys.rank());
  std::string s(text);
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string name = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!name.empty()) {
      int i = sys.index_of(name);
      if (i < 0) throw cox::InvalidArgument("unknown generator name: " + name);
      out.add(i);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

json names_of(const cox::CoxeterSystem& sys, const cox::GenSet& set) {
  json out = json::array();
  for (int i : set.indices()) out.push_back(sys.name(i));
  return out;
}

json splitting_json(const cox::SimplexOfGroups& splitting) {
  const cox::CoxeterSystem& sys = splitting.ambient;
  json faces = json::array();
  for (const auto& [a, local] : splitting.faces)
    faces.push_back({{"subset", names_of(sys, a)},
                     {"dim", splitting.v - a.size()},
                     {"local", names_of(sys, local)}});
  return {{"sprime", names_of(sys, splitting.sprime)},
          {"v", splitting.v},
          {"metric",
           splitting.metric == cox::SimplexOfGroups::Metric::Euclidean ? "euclidean"
                                                                       : "hyperbolic"},
          {"faces", faces}};
}

json curvature_json(const cox::CurvatureReport& report) {
  json angles = json::array();
  for (const cox::Angle& a : report.angles) angles.push_back(a.str());
  return {{"angles", angles},
          {"sum", report.sum.str()},
          {"compare",
           report.compare == cox::CurvatureReport::Compare::EqualPi ? "=pi" : "<pi"},
          {"verdict",
           report.verdict == cox::CurvatureReport::Verdict::Cat0 ? "CAT(0)" : "CAT(-1)"}};
}

void emit(const json& payload, char** out_json) {
  if (out_json == nullptr) throw cox::InvalidArgument("null output pointer");
  *out_json = dup_string(payload.dump(2));
  if (*out_json == nullptr) throw std::bad_alloc();
}

}  // namespace

extern "C" {

cox_status cox_system_parse(const char* text, cox_system** out_sys) {
  if (text == nullptr || out_sys == nullptr)
    return fail(COX_ERR_INVALID, "null argument");
  return wrap([&] { *out_sys = new cox_system{cox::parse_system(text)}; });
}

void cox_system_free(cox_system* sys) { delete sys; }

const char* cox_last_error(void) { return g_last_error.c_str(); }

int cox_system_rank(const cox_system* sys) { return sys ? sys->sys.rank() : -1; }

cox_status cox_system_serialize(const cox_system* sys, char** out_text) {
  if (sys == nullptr || out_text == nullptr) return fail(COX_ERR_INVALID, "null argument");
  *out_text = dup_string(sys->sys.serialize());
  return COX_OK;
}

cox_status cox_system_fingerprint(const cox_system* sys, char** out_hex) {
  if (sys == nullptr || out_hex == nullptr) return fail(COX_ERR_INVALID, "null argument");
  *out_hex = dup_string(sys->sys.fingerprint());
  return COX_OK;
}

void cox_string_free(char* s) { std::free(s); }

cox_status cox_reduce(const cox_system* sys, const char* word, long closure_cap,
                      char** out_word) {
  if (sys == nullptr || word == nullptr || out_word == nullptr)
    return fail(COX_ERR_INVALID, "null argument");
  return wrap([&] {
    cox::GroupElement g =
        cox::reduce(sys->sys, cox::parse_word(sys->sys, word), closure_cap_or_default(closure_cap));
    *out_word = dup_string(cox::format_word(sys->sys, g.word()));
  });
}

cox_status cox_equal(const cox_system* sys, const char* word_a, const char* word_b,
                     long closure_cap, int* out_equal) {
  if (sys == nullptr || word_a == nullptr || word_b == nullptr || out_equal == nullptr)
    return fail(COX_ERR_INVALID, "null argument");
  return wrap([&] {
    *out_equal = cox::equal(sys->sys, cox::parse_word(sys->sys, word_a),
                            cox::parse_word(sys->sys, word_b),
                            closure_cap_or_default(closure_cap))
                     ? 1
                     : 0;
  });
}

cox_status cox_length(const cox_system* sys, const char* word, long closure_cap,
                      long* out_length) {
  if (sys == nullptr || word == nullptr || out_length == nullptr)
    return fail(COX_ERR_INVALID, "null argument");
  return wrap([&] {
    *out_length = cox::length(sys->sys, cox::parse_word(sys->sys, word),
                              closure_cap_or_default(closure_cap));
  });
}

cox_status cox_classify(const cox_system* sys, char** out_json) {
  if (sys == nullptr) return fail(COX_ERR_INVALID, "null argument");
  return wrap([&] {
    const cox::CoxeterSystem& s = sys->sys;
    const cox::GenSet all = cox::GenSet::all(s.rank());
    json comps = json::array();
    for (const cox::GenSet& comp : cox::components(s, all)) {
      cox::TypeLabel label = cox::recognize_irreducible(cox::induced_subsystem(s, comp));
      const char* kind = nullptr;
      switch (label.kind) {
        case cox::TypeLabel::Kind::Finite: kind = "finite"; break;
        case cox::TypeLabel::Kind::Affine: kind = "affine"; break;
        case cox::TypeLabel::Kind::CompactHyperbolic: kind = "compact-hyperbolic"; break;
        case cox::TypeLabel::Kind::OtherInfinite: kind = "other-infinite"; break;
      }
      comps.push_back({{"generators", names_of(s, comp)},
                       {"kind", kind},
                       {"family", label.family.empty() ? json(nullptr) : json(label.family)},
                       {"rank", label.rank},
                       {"label", label.str()}});
    }
    auto ord = cox::order(s, all);
    emit({{"finite", ord.has_value()},
          {"order", ord ? json(ord->str()) : json("inf")},
          {"components", comps}},
         out_json);
  });
}

cox_status cox_spherical(const cox_system* sys, int k, char** out_json) {
  if (sys == nullptr) return fail(COX_ERR_INVALID, "null argument");
  return wrap([&] {
    cox::SphericityReport report = cox::is_k_spherical(sys->sys, k);
    emit({{"k", report.k},
          {"holds", report.holds},
          {"witness",
           report.witness ? names_of(sys->sys, *report.witness) : json(nullptr)}},
         out_json);
  });
}

cox_status cox_v(const cox_system* sys, char** out_json) {
  if (sys == nullptr) return fail(COX_ERR_INVALID, "null argument");
  return wrap([&] {
    auto v = cox::v_of(sys->sys);
    emit({{"v", v ? json(*v) : json("inf")}}, out_json);
  });
}

cox_status cox_intersect(const cox_system* sys, const char* T, const char* U,
                         const char* word, long closure_cap, char** out_json) {
  if (sys == nullptr || T == nullptr || U == nullptr)
    return fail(COX_ERR_INVALID, "null argument");
  return wrap([&] {
    const cox::CoxeterSystem& s = sys->sys;
    cox::GenSet t = parse_subset(s, T), u = parse_subset(s, U);
    if (word == nullptr || *word == '\0') {
      emit({{"mode", "special"},
            {"T", names_of(s, t)},
            {"U", names_of(s, u)},
            {"core", names_of(s, cox::special_intersection(s, t, u))}},
           out_json);
      return;
    }
    long cap = closure_cap_or_default(closure_cap);
    cox::Word w = cox::parse_word(s, word);
    auto dec = cox::double_coset_reduce(s, t, u, w, cap);
    auto inter = cox::parabolic_intersection(s, t, u, w, cap);
    bool incl = cox::parabolic_inclusion(s, t, u, w, cap);
    emit({{"mode", "parabolic"},
          {"T", names_of(s, t)},
          {"U", names_of(s, u)},
          {"word", cox::format_word(s, cox::reduce(s, w, cap).word())},
          {"decomposition",
           {{"x", cox::format_word(s, dec.x.word())},
            {"d", cox::format_word(s, dec.d.word())},
            {"y", cox::format_word(s, dec.y.word())}}},
          {"conjugator", cox::format_word(s, inter.conjugator.word())},
          {"core", names_of(s, inter.core)},
          {"inclusion", incl}},
         out_json);
  });
}

cox_status cox_angle(const cox_system* sys, const char* T, const char* U,
                     int use_oracle, long enum_cap, char** out_json) {
  if (sys == nullptr || T == nullptr || U == nullptr)
    return fail(COX_ERR_INVALID, "null argument");
  return wrap([&] {
    const cox::CoxeterSystem& s = sys->sys;
    cox::GenSet t = parse_subset(s, T), u = parse_subset(s, U);
    cox::Angle angle = use_oracle
                           ? cox::gs_angle_oracle(s, t, u, enum_cap <= 0 ? 100000 : enum_cap)
                           : cox::gs_angle_formula(s, t, u);
    emit({{"T", names_of(s, t)},
          {"U", names_of(s, u)},
          {"method", use_oracle ? "oracle" : "formula"},
          {"angle", angle.str()},
          {"m", angle.is_zero() ? json(nullptr) : json(angle.m())}},
         out_json);
  });
}

cox_status cox_split(const cox_system* sys, const char* sprime, char** out_json) {
  if (sys == nullptr || sprime == nullptr) return fail(COX_ERR_INVALID, "null argument");
  return wrap([&] {
    cox::SimplexOfGroups splitting =
        cox::v_splitting(sys->sys, parse_subset(sys->sys, sprime));
    emit(splitting_json(splitting), out_json);
  });
}

cox_status cox_curvature(const cox_system* sys, const char* sprime, char** out_json) {
  if (sys == nullptr || sprime == nullptr) return fail(COX_ERR_INVALID, "null argument");
  return wrap([&] {
    cox::SimplexOfGroups splitting =
        cox::v_splitting(sys->sys, parse_subset(sys->sys, sprime));
    cox::CurvatureReport report = cox::triangle_curvature(splitting);
    json payload = {{"sprime", names_of(sys->sys, splitting.sprime)}};
    json fields = curvature_json(report);
    for (auto& [key, value] : fields.items()) payload[key] = value;
    emit(payload, out_json);
  });
}

cox_status cox_fa(const cox_system* sys, int n, char** out_json) {
  if (sys == nullptr) return fail(COX_ERR_INVALID, "null argument");
  return wrap([&] {
    cox::FaVerdict verdict = cox::fa_verdict(sys->sys, n);
    const char* status = nullptr;
    switch (verdict.status) {
      case cox::FaVerdict::Status::Yes: status = "YES"; break;
      case cox::FaVerdict::Status::No: status = "NO"; break;
      case cox::FaVerdict::Status::ConjecturalNo: status = "CONJECTURAL_NO"; break;
    }
    json witness(nullptr);
    if (verdict.witness) {
      witness = json{{"sprime", names_of(sys->sys, *verdict.witness)}};
      if (verdict.splitting) witness["splitting"] = splitting_json(*verdict.splitting);
      if (verdict.curvature) witness["curvature"] = curvature_json(*verdict.curvature);
    }
    emit({{"n", verdict.n},
          {"status", status},
          {"basis", verdict.basis},
          {"v", verdict.v ? json(*verdict.v) : json(nullptr)},
          {"witness", witness}},
         out_json);
  });
}

cox_status cox_maxfa(const cox_system* sys, int n, char** out_json) {
  if (sys == nullptr) return fail(COX_ERR_INVALID, "null argument");
  return wrap([&] {
    cox::MaxFaResult result = cox::maximal_fa_subgroups(sys->sys, n);
    json subsets = json::array();
    for (const cox::GenSet& T : result.subsets) subsets.push_back(names_of(sys->sys, T));
    emit({{"n", n},
          {"tag", result.unconditional ? "unconditional" : "conditional-on-cat0-conjecture"},
          {"subsets", subsets}},
         out_json);
  });
}

cox_status cox_nerve(const cox_system* sys, const char* T, char** out_json) {
  if (sys == nullptr) return fail(COX_ERR_INVALID, "null argument");
  return wrap([&] {
    const cox::CoxeterSystem& s = sys->sys;
    cox::GenSet t = parse_subset(s, T);
    cox::SimplicialComplex complex = cox::build_nerve(s, t);
    cox::HomologyProfile profile = cox::homology(complex);
    json facets = json::array();
    for (const cox::GenSet& f : complex.facets) facets.push_back(names_of(s, f));
    json vertices = json::array();
    for (int v : complex.vertices) vertices.push_back(s.name(v));
    json torsion = json::array();
    for (const auto& degree : profile.torsion) {
      json divisors = json::array();
      for (const auto& d : degree) divisors.push_back(d.str());
      torsion.push_back(divisors);
    }
    emit({{"T", names_of(s, t)},
          {"vertices", vertices},
          {"facets", facets},
          {"dimension", complex.dimension()},
          {"homology",
           {{"simplex_counts", profile.simplex_counts},
            {"betti", profile.betti},
            {"reduced_betti", profile.reduced_betti},
            {"torsion", torsion},
            {"euler", profile.euler}}}},
         out_json);
  });
}

cox_status cox_dim_bounds(const cox_system* sys, int subset_rank_cap, char** out_json) {
  if (sys == nullptr) return fail(COX_ERR_INVALID, "null argument");
  return wrap([&] {
    cox::DimBounds bounds = cox::dimss_bounds(sys->sys, subset_rank_cap);
    json witness = {{"kind", bounds.kind == cox::DimBounds::WitnessKind::Homology
                                 ? "homology"
                                 : "spherical"},
                    {"T", names_of(sys->sys, bounds.witness_T)}};
    if (bounds.kind == cox::DimBounds::WitnessKind::Homology) {
      witness["k"] = bounds.witness_k;
      witness["convention"] = cox::DimBounds::kConvention;
    } else {
      witness["n"] = bounds.witness_k;
    }
    emit({{"lower", bounds.lower}, {"upper", bounds.upper}, {"witness", witness}},
         out_json);
  });
}

cox_status cox_enumerate(const cox_system* sys, const char* T, long element_cap,
                         char** out_json) {
  if (sys == nullptr) return fail(COX_ERR_INVALID, "null argument");
  return wrap([&] {
    const cox::CoxeterSystem& s = sys->sys;
    cox::GenSet t = parse_subset(s, T);
    auto elements = cox::enumerate_group(s, t, element_cap <= 0 ? 10000 : element_cap);
    json words = json::array();
    for (const cox::GroupElement& g : elements)
      words.push_back(cox::format_word(s, g.word()));
    emit({{"T", names_of(s, t)},
          {"count", elements.size()},
          {"elements", words}},
         out_json);
  });
}

}  // extern "C"
