// isospec command line: verification certificates, conductor tables, bound
// curves, Lie-type embedding certificates and Chevalley orders.
//
// Exit codes: 0 verified/success, 1 verification counterexample, 2 usage,
// 3 cap exceeded, 4 empty result.
#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "isospec/isospec.hpp"

using namespace isospec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitEmpty = 4;

std::uint64_t field_cap_from_env() {
  if (const char* v = std::getenv("ISOSPEC_MAX_Q")) {
    const auto parsed = std::strtoull(v, nullptr, 10);
    if (parsed >= 2) return parsed;
  }
  return Fq::kDefaultQCap;
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&now));
  return buf;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload << '\n';
  } else {
    std::ofstream f(out_path);
    f << payload << '\n';
  }
}

struct TypeArg {
  LieFamily family;
  unsigned rank;
};

std::optional<TypeArg> parse_type(const std::string& s, unsigned rank_flag) {
  if (s == "A1" || (s == "A" && rank_flag == 1)) return std::nullopt;  // caller reports the exclusion
  const std::vector<std::pair<std::string, TypeArg>> fixed = {
      {"A2", {LieFamily::A, 2}}, {"A3", {LieFamily::A, 3}}, {"B2", {LieFamily::B, 2}},
      {"C2", {LieFamily::C, 2}}, {"B3", {LieFamily::B, 3}}, {"C3", {LieFamily::C, 3}},
      {"D4", {LieFamily::D, 4}}, {"E6", {LieFamily::E6, 6}}, {"E7", {LieFamily::E7, 7}},
      {"E8", {LieFamily::E8, 8}}, {"F4", {LieFamily::F4, 4}}, {"G2", {LieFamily::G2, 2}}};
  for (const auto& [name, t] : fixed)
    if (s == name) return t;
  if (s.size() == 1 && rank_flag > 0) {
    switch (s[0]) {
      case 'A': return TypeArg{LieFamily::A, rank_flag};
      case 'B': return TypeArg{LieFamily::B, rank_flag};
      case 'C': return TypeArg{LieFamily::C, rank_flag};
      case 'D': return TypeArg{LieFamily::D, rank_flag};
    }
  }
  return std::nullopt;
}

int run_verify(std::uint64_t q, bool exhaustive_oracle, const std::string& out, std::uint64_t cap_q) {
  const auto fac = factorize_u64(q);
  if (fac.size() != 1) {
    std::cerr << "verify: " << q << " is not a prime power\n";
    return kExitUsage;
  }
  Fq field(fac[0].first, fac[0].second, cap_q);
  HeisenbergGroup g(field);
  const auto family = bgg_family(g);
  const auto table = brute_force_class_table(g);

  json doc;
  doc["command"] = "verify";
  doc["config"] = {{"q", q}, {"exhaustive_oracle", exhaustive_oracle}, {"max_q", cap_q}};
  doc["generated_at"] = timestamp();
  doc["field"] = to_json(field);
  doc["class_count"] = table.classes.size();

  std::uint64_t expected_count = 1;
  for (unsigned i = 0; i + 1 < field.degree(); ++i)
    for (unsigned j = 0; j < field.degree(); ++j) expected_count *= field.p();
  bool verified = family.size() == expected_count;

  json subgroups = json::array();
  std::vector<Fingerprint> prints;
  for (const auto& h : family) {
    prints.push_back(fingerprint(table, h));
    subgroups.push_back(to_json(g, h));
  }
  doc["family"] = {{"count", family.size()}, {"subgroup_order", q}, {"subgroups", subgroups}};
  json fps = json::array();
  for (const auto& fp : prints) fps.push_back(to_json(fp));
  doc["fingerprints"] = fps;

  json counterexamples = json::array();
  std::uint64_t pair_checks = 0;
  bool all_ac = true, all_nc = true, all_exhausted = true;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      ++pair_checks;
      if (!almost_conjugate(prints[i], prints[j])) {
        all_ac = false;
        counterexamples.push_back({{"kind", "fingerprint_mismatch"}, {"pair", {i, j}}});
      }
      const auto verdict = find_conjugator(g, family[i], family[j]);
      if (verdict.conjugate) {
        all_nc = false;
        counterexamples.push_back(
            {{"kind", "conjugate_pair"}, {"pair", {i, j}}, {"witness", *verdict.witness}});
      } else if (!verdict.search_exhausted) {
        all_exhausted = false;
      }
    }
  verified = verified && all_ac && all_nc;
  doc["pairwise"] = {{"checked_pairs", pair_checks},
                     {"all_almost_conjugate", all_ac},
                     {"all_nonconjugate", all_nc},
                     {"all_searches_exhausted", all_exhausted}};

  json schreier = json::array();
  const auto battery = generator_battery(g);
  const std::vector<std::string> battery_names = {"standard", "enriched_central"};
  for (std::size_t b = 0; b < battery.size(); ++b) {
    json gens = json::array();
    for (auto s : battery[b]) gens.push_back(triple_json(g, s));
    std::vector<bigint> reference;
    bool equal = true;
    std::uint64_t vertices = 0;
    bool connected = false;
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto graph = schreier_graph(g, family[i], battery[b]);
      vertices = graph.vertices;
      connected = graph.connected;
      const auto cp = charpoly(graph);
      if (i == 0)
        reference = cp;
      else if (cp != reference) {
        equal = false;
        verified = false;
        counterexamples.push_back({{"kind", "spectrum_mismatch"}, {"battery", battery_names[b]}, {"pair", {0, i}}});
      }
    }
    schreier.push_back({{"battery", battery_names[b]},
                        {"generators", gens},
                        {"vertices", vertices},
                        {"connected", connected},
                        {"char_poly", charpoly_json(reference)},
                        {"all_equal", equal}});
  }
  doc["schreier"] = schreier;

  if (exhaustive_oracle) {
    const auto all = subgroups_of_order(g, q);
    bool oracle_ok = true;
    for (const auto& h : family) {
      bool found = false;
      for (const auto& s : all) found |= (s == h);
      oracle_ok &= found;
    }
    const auto fp1 = fingerprint(table, family.front());
    std::uint64_t matching = 0;
    for (const auto& s : all)
      if (almost_conjugate(fingerprint(table, s), fp1)) ++matching;
    doc["oracle"] = {{"subgroups_of_order_q", all.size()},
                     {"family_contained", oracle_ok},
                     {"almost_conjugate_to_base", matching}};
    if (!oracle_ok) {
      verified = false;
      counterexamples.push_back({{"kind", "oracle_missing_family_member"}});
    }
  }

  doc["counterexamples"] = counterexamples;
  doc["verified"] = verified;
  emit(doc.dump(2), out);
  return verified ? kExitOk : kExitCounterexample;
}

int run_fields(const std::vector<std::uint64_t>& candidates, std::uint64_t limit,
               const std::string& format, const std::string& out) {
  const auto stream = inert_conductor_stream(candidates, limit);
  std::vector<ConductorRow> rows;
  for (const auto& c : stream)
    rows.push_back(ConductorRow{real_field_data(c.conductor), c.witness,
                                decomposition_in_real_subfield(c.witness, c.conductor)});
  if (format == "csv") {
    emit(conductor_csv(rows), out);
  } else {
    json doc;
    doc["command"] = "fields";
    doc["config"] = {{"candidates", candidates}, {"limit", limit}, {"format", format}};
    doc["generated_at"] = timestamp();
    json table = json::array();
    for (const auto& r : rows) table.push_back(to_json(r));
    doc["conductors"] = table;
    emit(doc.dump(2), out);
  }
  return rows.empty() ? kExitEmpty : kExitOk;
}

struct BoundFlags {
  double c0 = 1.0, c0_prime = 1.0;
  std::uint64_t p0 = 13, p_prime = 5;
  double cap_exponent = 1.0, eps = 0.05;
  int s = 0;
  bool torsion_free = false;
  double ctf = 16.0;
};

BoundParams make_params(const TypeArg& t, const BoundFlags& f) {
  BoundParams p;
  p.group = lie_data(t.family, t.rank, f.s);
  p.c0 = f.c0;
  p.c0_prime = f.c0_prime;
  p.p0 = f.p0;
  p.p_prime = f.p_prime;
  p.class_cap_exponent = f.cap_exponent;
  p.epsilon = f.eps;
  p.torsion_free = f.torsion_free;
  p.torsion_index_constant = f.ctf;
  p.validate();
  return p;
}

json growth_json(const GrowthTable& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    json r = to_json(t.rows[i]);
    if (!std::isnan(t.a_running[i])) r["a_running"] = t.a_running[i];
    rows.push_back(std::move(r));
  }
  json j{{"rows", rows}};
  if (t.positivity_threshold) j["positivity_threshold"] = *t.positivity_threshold;
  if (t.exponent_a) j["exponent_a"] = *t.exponent_a;
  if (t.c6) j["c6"] = *t.c6;
  return j;
}

int run_bounds(const TypeArg& t, const BoundFlags& flags, std::uint64_t d_lo, std::uint64_t d_hi,
               bool paper_literal, const std::string& format, const std::string& out) {
  const BoundParams params = make_params(t, flags);
  const auto table = growth_table(params, d_lo, d_hi);
  if (format == "csv") {
    emit(growth_csv(table), out);
  } else {
    json doc;
    doc["command"] = "bounds";
    doc["config"] = to_json(params);
    doc["config"]["d_range"] = {d_lo, d_hi};
    doc["config"]["paper_literal_count"] = paper_literal;
    doc["generated_at"] = timestamp();
    doc["growth"] = growth_json(table);
    emit(doc.dump(2), out);
  }
  return kExitOk;
}

int run_pipeline(const TypeArg& t, const BoundFlags& flags, std::uint64_t d_lo, std::uint64_t d_hi,
                 bool no_doubling, bool paper_literal, const std::string& out) {
  const BoundParams params = make_params(t, flags);
  // conductors in which the chosen inert prime is a primitive root and whose
  // mapped degree lands in the requested range
  const std::uint64_t limit = no_doubling ? 2 * d_hi + 1 : d_hi + 1;
  const auto stream = inert_conductor_stream({params.p_prime}, limit);
  json conductor_rows = json::array();
  std::vector<std::uint64_t> degrees;
  for (const auto& c : stream) {
    const std::uint64_t base_degree = (c.conductor - 1) / 2;
    const std::uint64_t d = no_doubling ? base_degree : 2 * base_degree;
    if (d < d_lo || d > d_hi) continue;
    degrees.push_back(d);
    const auto k = real_field_data(c.conductor);
    conductor_rows.push_back({{"conductor", c.conductor},
                              {"witness", c.witness},
                              {"base_degree", base_degree},
                              {"d", d},
                              {"rd_approx", k.root_discriminant.approx()},
                              {"report", to_json(evaluate_bound_report(params, d))}});
  }
  json doc;
  doc["command"] = "pipeline";
  doc["config"] = to_json(params);
  doc["config"]["d_range"] = {d_lo, d_hi};
  doc["config"]["degree_doubling"] = !no_doubling;
  doc["config"]["paper_literal_count"] = paper_literal;
  doc["generated_at"] = timestamp();
  doc["conductors"] = conductor_rows;

  if (degrees.empty()) {
    doc["growth"] = nullptr;
    emit(doc.dump(2), out);
    return kExitEmpty;
  }

  const auto table = growth_table(params, d_lo, d_hi);
  doc["growth"] = growth_json(table);
  if (paper_literal) {
    json literal = json::array();
    for (auto d : degrees) {
      const auto r = evaluate_bound_report(params, d);
      literal.push_back({{"d", d}, {"log_count_paper_literal", r.log_count_paper_literal}});
    }
    doc["paper_literal_counts"] = literal;
  }
  emit(doc.dump(2), out);
  return kExitOk;
}

int run_embed(const std::string& type, std::uint64_t q, bool with_map_table, const std::string& out,
              std::uint64_t cap_q) {
  const auto fac = factorize_u64(q);
  if (fac.size() != 1) {
    std::cerr << "embed: " << q << " is not a prime power\n";
    return kExitUsage;
  }
  Fq field(fac[0].first, fac[0].second, cap_q);
  std::optional<RootPairRealization> r;
  if (type == "A2")
    r = RootPairRealization::special_linear3(field);
  else if (type == "B2")
    r = RootPairRealization::symplectic4(field);  // throws invalid_argument in char 2
  else {
    std::cerr << "embed: type must be A2 or B2\n";
    return kExitUsage;
  }
  const std::uint64_t q3 = q * q * q;
  const auto u = generate_closure(*r, r->root_generators(), 2 * q3);
  const auto cert = heisenberg_iso_check(u, *r);
  json doc;
  doc["command"] = "embed";
  doc["config"] = {{"type", type}, {"q", q}, {"max_q", cap_q}};
  doc["generated_at"] = timestamp();
  doc["certificate"] = to_json(cert, with_map_table);
  emit(doc.dump(2), out);
  return cert.isomorphism ? kExitOk : kExitCounterexample;
}

int run_order(const std::string& type, unsigned rank, std::uint64_t q, std::uint64_t index_p,
              const std::vector<unsigned>& degrees, const std::string& out) {
  const auto t = parse_type(type, rank);
  if (!t) {
    std::cerr << "order: unsupported or excluded type " << type << " (rank " << rank << ")\n";
    return kExitUsage;
  }
  json doc;
  doc["command"] = "order";
  doc["config"] = {{"type", type}, {"rank", t->rank}, {"q", q}};
  doc["generated_at"] = timestamp();
  if (!degrees.empty()) {
    doc["config"]["index_p"] = index_p;
    doc["config"]["inertia_degrees"] = degrees;
    doc["index_bound"] = decimal(prop41_index_bound(t->family, t->rank, index_p, degrees));
  } else {
    doc["order"] = decimal(chevalley_order(t->family, t->rank, q));
  }
  emit(doc.dump(2), out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"desk-scale isospectrality toolkit"};
  app.require_subcommand(1);
  const std::uint64_t cap_q = field_cap_from_env();

  std::string out;
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out, "write the report to a file instead of stdout");
  };

  // verify
  auto* verify = app.add_subcommand("verify", "certify the almost-conjugate subgroup family for one q");
  add_out(verify);
  std::uint64_t verify_q = 4;
  bool exhaustive_oracle = false;
  verify->add_option("--q", verify_q, "prime power field size")->required();
  verify->add_flag("--exhaustive-oracle", exhaustive_oracle, "cross-check against the complete subgroup enumeration");

  // fields
  auto* fields = app.add_subcommand("fields", "tabulate inert conductors and field invariants");
  add_out(fields);
  std::vector<std::uint64_t> candidates = {5, 7, 11};
  std::uint64_t limit = 1000;
  std::string fields_format = "json";
  fields->add_option("--candidates", candidates, "candidate primes, subset of {5,7,11}")->delimiter(',');
  fields->add_option("--limit", limit, "conductor bound");
  fields->add_option("--format", fields_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  // shared bound flags
  BoundFlags bf;
  std::string type_name = "A2";
  unsigned rank_flag = 0;
  auto add_bound_flags = [&](CLI::App* cmd) {
    cmd->add_option("--type", type_name, "Lie type label, e.g. A2, B2, G2, E8, or a letter with --rank");
    cmd->add_option("--rank", rank_flag, "rank when --type is a bare letter");
    cmd->add_option("--c0", bf.c0, "field discriminant constant");
    cmd->add_option("--c0p", bf.c0_prime, "secondary discriminant constant");
    cmd->add_option("--p0", bf.p0, "residue characteristic at the special place (> 11)");
    cmd->add_option("--pprime", bf.p_prime, "inert prime in (3, 11]");
    cmd->add_option("--cap-exponent", bf.cap_exponent, "conjugacy cap exponent C");
    cmd->add_option("--eps", bf.eps, "epsilon in (0, 1/4)");
    cmd->add_option("--s", bf.s, "integer constant s of the volume formula");
    cmd->add_flag("--torsion-free", bf.torsion_free, "apply the torsion-free index multiplier");
    cmd->add_option("--ctf", bf.ctf, "torsion-free index constant");
  };

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "field sequence -> inert prime -> counts -> growth curve");
  add_out(pipeline);
  add_bound_flags(pipeline);
  std::string drange = "150:400";
  bool no_doubling = false, paper_literal = false;
  pipeline->add_option("--drange", drange, "degree range lo:hi");
  pipeline->add_flag("--no-doubling", no_doubling, "disable the quadratic degree-doubling step");
  pipeline->add_flag("--paper-literal-count", paper_literal, "also emit the literal c3^{d^2} count variant");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "growth table over a raw degree grid");
  add_out(bounds);
  add_bound_flags(bounds);
  std::string bounds_range = "150:400";
  std::string bounds_format = "json";
  bounds->add_option("--drange", bounds_range, "degree range lo:hi");
  bounds->add_option("--format", bounds_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  bounds->add_flag("--paper-literal-count", paper_literal, "also emit the literal c3^{d^2} count variant");

  // embed
  auto* embed = app.add_subcommand("embed", "Lie-type Heisenberg embedding certificate");
  add_out(embed);
  std::string embed_type = "A2";
  std::uint64_t embed_q = 5;
  bool map_table = false;
  embed->add_option("--type", embed_type, "A2 or B2");
  embed->add_option("--q", embed_q, "prime power field size")->required();
  embed->add_flag("--map-table", map_table, "include the full (x,y,z) -> matrix table");

  // order
  auto* order = app.add_subcommand("order", "Chevalley group order, or the reduction index bound");
  add_out(order);
  std::string order_type = "A";
  unsigned order_rank = 2;
  std::uint64_t order_q = 2;
  std::uint64_t index_p = 5;
  std::vector<unsigned> inertia_degrees;
  order->add_option("--type", order_type, "type label");
  order->add_option("--rank", order_rank, "rank");
  order->add_option("--q", order_q, "field size");
  order->add_option("--index-p", index_p, "prime for the index bound");
  order->add_option("--degrees", inertia_degrees, "inertia degrees for the index bound")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto parse_range = [](const std::string& s, std::uint64_t& lo, std::uint64_t& hi) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) return false;
    lo = std::strtoull(s.substr(0, colon).c_str(), nullptr, 10);
    hi = std::strtoull(s.substr(colon + 1).c_str(), nullptr, 10);
    return lo >= 2 && hi >= lo;
  };

  try {
    if (verify->parsed()) return run_verify(verify_q, exhaustive_oracle, out, cap_q);
    if (fields->parsed()) return run_fields(candidates, limit, fields_format, out);
    if (pipeline->parsed() || bounds->parsed()) {
      const auto t = parse_type(type_name, rank_flag);
      if (!t) {
        std::cerr << "type " << type_name << " is unsupported or excluded (no type A1 factors)\n";
        return kExitUsage;
      }
      std::uint64_t lo = 0, hi = 0;
      const std::string& range = pipeline->parsed() ? drange : bounds_range;
      if (!parse_range(range, lo, hi)) {
        std::cerr << "bad --drange, expected lo:hi with 2 <= lo <= hi\n";
        return kExitUsage;
      }
      if (pipeline->parsed())
        return run_pipeline(*t, bf, lo, hi, no_doubling, paper_literal, out);
      return run_bounds(*t, bf, lo, hi, paper_literal, bounds_format, out);
    }
    if (embed->parsed()) return run_embed(embed_type, embed_q, map_table, out, cap_q);
    if (order->parsed()) return run_order(order_type, order_rank, order_q, index_p, inertia_degrees, out);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCounterexample;
  }
  return kExitUsage;
}
