#include "cycpres/json_io.hpp"

#include <stdexcept>

namespace cycpres {

namespace {

std::string istr(const Int& v) { return v.get_str(); }

const char* gnkl_case_name(GnklCase c) {
  switch (c) {
    case GnklCase::MetacyclicB: return "metacyclic";
    case GnklCase::Cyclic: return "cyclic";
    case GnklCase::CyclicTimesF2: return "cyclic-free-rank-2";
  }
  return "?";
}

}  // namespace

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (const Letter& l : w.letters) out.push_back(Json::array({l.sym, l.exp}));
  return out;
}

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("word json: expected an array");
  Word w;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument("word json: each letter is [sym, exp]");
    w.letters.push_back({e[0].get<int>(), e[1].get<long long>()});
  }
  return reduce(w);
}

Json params_to_json(const ParamsM& p) {
  return Json{{"r", p.r}, {"n", p.n}, {"s", p.s}, {"f", p.f}, {"A", p.A}};
}

ParamsM params_from_json(const Json& j) {
  for (const char* k : {"r", "n", "s", "f", "A"})
    if (!j.contains(k) || !j[k].is_number_integer())
      throw std::invalid_argument(std::string("params json: missing integer ") + k);
  return params_m(j["r"].get<long long>(), j["n"].get<long long>(),
                  j["s"].get<long long>(), j["f"].get<long long>(),
                  j["A"].get<long long>());
}

std::string rational_text(const Rat& q) { return q.get_str(); }

Json metacyclic_to_json(const MetacyclicParams& b) {
  return Json{{"M", istr(b.M)},
              {"N", b.N},
              {"R", istr(b.R)},
              {"lambda", b.lambda},
              {"order", istr(b_order(b))}};
}

Json decomposition_to_json(const FreeProductDecomposition& d) {
  return Json{{"copies", d.copies},
              {"factor", metacyclic_to_json(d.factor)},
              {"free_rank", d.free_rank},
              {"cyclic_factor", d.cyclic_factor}};
}

Json classification_record(const ParamsM& p, const Classification& c) {
  DerivedParams d = derive(p);
  Json out;
  out["params"] = params_to_json(p);
  out["derived"] = Json{{"m", d.m},       {"alpha", d.alpha}, {"g", d.g},
                        {"rho", d.rho},   {"sigma", d.sigma}, {"mu", istr(d.mu)}};
  out["kind"] = kind_name(c.kind);
  if (c.kind == Kind::Finite)
    out["orders"] = Json{{"G", istr(c.order_G)},
                         {"E", istr(c.order_E)},
                         {"cyclic_E", c.cyclic_E}};
  out["euler"] = Json{{"E", rational_text(c.euler_E)}, {"G", rational_text(c.euler_G)}};
  out["tits"] = tits_name(c.tits);
  bool cc = cyclic_condition(p);
  out["cyclic_condition"] = cc;
  if (cc) out["finite_subgroup_bound"] = istr(finite_subgroup_bound(p));
  if (c.kind == Kind::EqualPowers) {
    Json ep;
    if (c.gamma_free_rank) ep["free_rank"] = *c.gamma_free_rank;
    if (c.two_dimensional) ep["two_dimensional"] = true;
    if (c.torsion) ep["torsion"] = torsion_name(*c.torsion);
    out["equal_powers"] = ep;
  }
  out["flags"] = Json{{"coherent", c.flags.coherent},
                      {"subgroup_separable", c.flags.subgroup_separable},
                      {"finite_subgroups_metacyclic", c.flags.finite_subgroups_metacyclic},
                      {"geom_dim_le_2_finite_index", c.flags.geom_dim_le_2_finite_index}};
  if (!c.warnings.empty()) out["warnings"] = c.warnings;
  return out;
}

Json construct_record(const ParamsM& p) {
  Word w = type_m_word(p);
  CyclicPresentation cp = make_cyclic(p.n, w);
  Json out;
  out["params"] = params_to_json(p);
  out["word"] = Json{{"text", word_text(w, x_generators(p.n))},
                     {"letters", word_to_json(w)}};
  out["cyclic_presentation"] = presentation_text(cyclic_presentation(cp));
  out["shift_extension"] = presentation_text(shift_extension(cp));
  out["two_generator"] = presentation_text(e_presentation(p.r, p.n, p.s, p.A));
  return out;
}

Json report_record(const ParamsM& p, const VerificationReport& rep) {
  Json checks = Json::array();
  for (const Check& c : rep.checks)
    checks.push_back(Json{{"name", c.name},
                          {"status", check_status_name(c.status)},
                          {"detail", c.detail}});
  return Json{{"params", params_to_json(p)},
              {"checks", checks},
              {"exit_code", rep.exit_code()}};
}

Json family_record(const FamilyResult& fr) {
  return Json{{"family", family_name(fr.family)},
              {"args", fr.args},
              {"params", params_to_json(fr.params)},
              {"metacyclic", metacyclic_to_json(fr.b)},
              {"order", istr(fr.order)}};
}

Json gnkl_record(const GnklParams& q, const GnklReport& rep) {
  Json out;
  out["n"] = q.n;
  out["k"] = q.k;
  out["l"] = q.l;
  out["case"] = gnkl_case_name(rep.kind);
  out["normalized"] = params_to_json(rep.normalized);
  out["decomposition"] = decomposition_to_json(rep.dec);
  if (!rep.note.empty()) out["note"] = rep.note;
  return out;
}

std::string csv_header() {
  return "r,n,s,f,A,kind,order_G,order_E,cyclic_E,euler_E,euler_G,tits,"
         "torsion,free_rank,two_dimensional,cyclic_condition,warnings";
}

std::string csv_row(const ParamsM& p, const Classification& c) {
  auto ll = [](long long v) { return std::to_string(v); };
  std::string row = ll(p.r) + "," + ll(p.n) + "," + ll(p.s) + "," + ll(p.f) +
                    "," + ll(p.A) + "," + kind_name(c.kind) + ",";
  if (c.kind == Kind::Finite)
    row += istr(c.order_G) + "," + istr(c.order_E) + "," +
           (c.cyclic_E ? "1" : "0");
  else
    row += ",,";
  row += "," + rational_text(c.euler_E) + "," + rational_text(c.euler_G) + "," +
         tits_name(c.tits) + ",";
  row += c.torsion ? torsion_name(*c.torsion) : "";
  row += ",";
  row += c.gamma_free_rank ? ll(*c.gamma_free_rank) : "";
  row += ",";
  if (c.kind == Kind::EqualPowers) row += c.two_dimensional ? "1" : "0";
  row += ",";
  row += cyclic_condition(p) ? "1" : "0";
  row += ",";
  for (size_t i = 0; i < c.warnings.size(); ++i) {
    if (i) row += "; ";
    row += c.warnings[i];
  }
  return row;
}

}  // namespace cycpres
