#ifndef ISOSPEC_CERTIFICATES_HPP
#define ISOSPEC_CERTIFICATES_HPP

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "isospec/bounds.hpp"
#include "isospec/conjugacy.hpp"
#include "isospec/cyclotomic.hpp"
#include "isospec/heisenberg.hpp"
#include "isospec/lie_type.hpp"
#include "isospec/schreier.hpp"

namespace isospec {

using json = nlohmann::json;

inline std::string decimal(const bigint& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

inline json to_json(const Fq& f) {
  return json{{"p", f.p()}, {"n", f.degree()}, {"modulus", f.modulus()},
              {"element_encoding", "index = sum c_j p^j over the coefficient vector"}};
}

inline json triple_json(const HeisenbergGroup& g, std::uint64_t e) {
  const auto t = g.unpack(e);
  return json::array({t.x, t.y, t.z});
}

inline json to_json(const HeisenbergGroup& g, const Subgroup& s) {
  json elems = json::array();
  for (auto e : s.elements) elems.push_back(triple_json(g, e));
  return json{{"order", s.order()}, {"elements", elems}};
}

inline json to_json(const Fingerprint& fp) {
  return json{{"counts", fp.counts}, {"subgroup_order", fp.subgroup_order}};
}

inline json to_json(const ConjugacyVerdict& v) {
  json j{{"conjugate", v.conjugate},
         {"search_exhausted", v.search_exhausted},
         {"order_mismatch", v.order_mismatch}};
  if (v.witness) j["witness"] = *v.witness;
  return j;
}

inline json charpoly_json(const std::vector<bigint>& coeffs) {
  json j = json::array();
  for (const auto& c : coeffs) j.push_back(decimal(c));
  return j;
}

inline json to_json(const Mat& m) {
  json rows = json::array();
  for (unsigned i = 0; i < m.dim; ++i) {
    json row = json::array();
    for (unsigned j = 0; j < m.dim; ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

inline json to_json(const EmbeddingCertificate& cert, bool include_map_table) {
  json j{{"field", {{"p", cert.field_p}, {"n", cert.field_n}}},
         {"ambient", cert.ambient == Ambient::SpecialLinear3 ? "SL3" : "Sp4"},
         {"generated_order", cert.generated_order},
         {"isomorphism", cert.isomorphism},
         {"commutator_param", cert.commutator_param}};
  if (!cert.failure.empty()) j["failure"] = cert.failure;
  if (cert.counterexample_pair)
    j["counterexample_pair"] = json::array({cert.counterexample_pair->first, cert.counterexample_pair->second});
  if (include_map_table && cert.isomorphism) {
    json table = json::array();
    for (std::uint64_t e = 0; e < cert.images.size(); ++e)
      table.push_back(json{{"element", e}, {"matrix", to_json(cert.images[e])}});
    j["map_table"] = table;
  }
  return j;
}

struct ConductorRow {
  CyclotomicRealField field;
  std::uint64_t witness = 0;
  DecompositionType decomposition;
};

inline json to_json(const ConductorRow& row) {
  return json{{"conductor", row.field.conductor},
              {"degree", row.field.degree},
              {"discriminant", decimal(row.field.discriminant)},
              {"rd_base", row.field.root_discriminant.base},
              {"rd_exp_num", row.field.root_discriminant.exp_num},
              {"rd_exp_den", row.field.root_discriminant.exp_den},
              {"rd_approx", row.field.root_discriminant.approx()},
              {"witness", row.witness},
              {"residue_degree", row.decomposition.residue_degree},
              {"num_primes", row.decomposition.num_primes}};
}

inline std::string conductor_csv(const std::vector<ConductorRow>& rows) {
  std::ostringstream os;
  os << "conductor,degree,discriminant,rd_exact,rd_approx,witness,residue_degree,num_primes\n";
  for (const auto& r : rows) {
    os << r.field.conductor << ',' << r.field.degree << ',' << decimal(r.field.discriminant) << ','
       << r.field.root_discriminant.base << "^(" << r.field.root_discriminant.exp_num << '/'
       << r.field.root_discriminant.exp_den << ")," << r.field.root_discriminant.approx() << ','
       << r.witness << ',' << r.decomposition.residue_degree << ',' << r.decomposition.num_primes << '\n';
  }
  return os.str();
}

inline json to_json(const BoundParams& p) {
  return json{{"type", to_string(p.group.family)},
              {"rank", p.group.rank},
              {"dim", p.group.dim},
              {"exponents", p.group.exponents},
              {"s", p.group.s},
              {"c0", p.c0},
              {"c0_prime", p.c0_prime},
              {"p0", p.p0},
              {"p_prime", p.p_prime},
              {"class_cap_exponent", p.class_cap_exponent},
              {"epsilon", p.epsilon},
              {"torsion_free", p.torsion_free},
              {"torsion_index_constant", p.torsion_index_constant}};
}

inline json to_json(const BoundReport& r) {
  return json{{"d", r.d},
              {"log_c1", r.log_c1},
              {"log_c3", r.log_c3},
              {"log_c4", r.log_c4},
              {"log_c5", r.log_c5},
              {"gamma", r.gamma},
              {"log_x", r.log_x},
              {"gamma_d_log_d", r.gamma_d_log_d},
              {"log_subgroup_count", r.log_subgroup_count},
              {"log_class_cap", r.log_class_cap},
              {"log_nonconjugate_count", r.log_nonconjugate_count},
              {"c4_valid", r.c4_valid},
              {"log_count_paper_literal", r.log_count_paper_literal}};
}

inline std::string growth_csv(const GrowthTable& t) {
  std::ostringstream os;
  os << "d,log_x,log_subgroup_count,log_class_cap,log_nonconjugate_count,a_running\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    os << r.d << ',' << r.log_x << ',' << r.log_subgroup_count << ',' << r.log_class_cap << ','
       << r.log_nonconjugate_count << ',';
    if (!std::isnan(t.a_running[i])) os << t.a_running[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace isospec

#endif
