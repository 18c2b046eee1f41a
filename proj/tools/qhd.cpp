#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qhd/pipeline.hpp"
#include "qhd/qhd_dim.hpp"

using namespace qhd;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int env_max_p() {
  if (const char* s = std::getenv("QHD_MAX_P")) {
    try {
      return std::stoi(s);
    } catch (const std::exception&) {
      throw UsageError("QHD_MAX_P must be an integer");
    }
  }
  return 4;
}

FamilyId family_id(const std::string& fam, int p, int variant) {
  FamilyId f;
  try {
    f.tag = parse_family(fam);
  } catch (const std::exception&) {
    throw UsageError("unknown family '" + fam + "' (expected A4, B4 or C4)");
  }
  if (p < 1) throw UsageError("--p must be >= 1");
  if (variant != 1 && variant != -1) throw UsageError("--variant must be +1 or -1");
  f.p = p;
  f.variant = variant;
  return f;
}

ResolutionGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
  try {
    return ResolutionGraph::from_json(j);
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void require_negative_definite(const ResolutionGraph& g) {
  if (!is_negative_definite(g)) throw UsageError("graph is not negative definite");
}

std::string yes(bool b) { return b ? "true" : "false"; }

void print_report(const VerificationReport& r) {
  const auto& P = r.params;
  std::cout << "family: " << to_string(r.family) << "\n";
  std::cout << "group: m=" << P.m << " n=" << P.n << " r=" << P.r << " d=" << P.d << " |G|=" << P.order()
            << " abelianization=" << r.abelianization << "\n";
  std::cout << "wolf conditions: " << yes(r.wolf.all()) << "\n";
  std::cout << "free: " << yes(r.free) << "\ninvariant: " << yes(r.invariant) << "\n";
  if (!r.orbits.empty()) {
    std::cout << "isotropy orbits (quotient group of order " << r.quotient_order << "):\n";
    for (const auto& o : r.orbits)
      std::cout << "  " << point_to_string(o.representative) << "  stabilizer " << o.generator.to_string()
                << " of order " << o.stabilizer_order << ", type " << o.type.to_string() << "\n";
  }
  if (r.quotient_genus) std::cout << "curve genus: " << r.curve_genus << ", quotient genus: " << *r.quotient_genus << "\n";
  if (r.central_weight) std::cout << "central weight: -" << *r.central_weight << "\n";
  if (r.graph) {
    std::cout << "determinant: " << r.determinant.get_str() << " (n^2 = " << r.n_squared.get_str() << ")\n";
    std::cout << "graph: " << r.graph->to_json().dump() << "\n";
  }
  if (r.euler_milnor) {
    std::cout << "euler characteristic: " << r.euler_milnor << " (|G| = " << P.order() << ")";
    if (r.euler_cover) std::cout << ", cyclic cover: " << *r.euler_cover;
    std::cout << "\n";
  }
  if (r.cross_ratio) std::cout << "cross ratio: " << r.cross_ratio->to_string() << "\n";
  for (const auto& f : r.flags) std::cout << "note: " << f << "\n";
  std::cout << "status: " << r.status() << "\n";
}

std::vector<std::int64_t> parse_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("expected a comma-separated list of integers, got '" + s + "'");
    }
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::string join(const std::vector<std::int64_t>& v, const char* sep = ",") {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : sep) + std::to_string(x);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational homology disk smoothings: family verification and graph invariants"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string fam_name;
  int p = 0, variant = 1;
  std::string file;

  // family verify
  auto* family = app.add_subcommand("family", "Family verification");
  family->require_subcommand(1);
  auto* verify = family->add_subcommand("verify", "Run the full verification for one family member");
  verify->add_option("--family", fam_name, "A4, B4 or C4")->required();
  verify->add_option("--p", p, "family parameter p >= 1")->required();
  verify->add_option("--variant", variant, "character variant l = +1 or -1");
  verify->add_flag("--json", as_json, "emit the report as JSON");

  // graph tools
  auto* graph = app.add_subcommand("graph", "Invariants of a resolution graph given as JSON");
  graph->require_subcommand(1);
  auto* g_disc = graph->add_subcommand("discriminant", "|det| of the intersection matrix");
  auto* g_rat = graph->add_subcommand("rationality", "Laufer's rationality test");
  auto* g_screen = graph->add_subcommand("screen", "Necessary conditions for a rational homology disk smoothing");
  auto* g_iso = graph->add_subcommand("isotropic", "Self-isotropic subgroups of the discriminant group");
  std::int64_t iso_order = 0, max_order = 100000;
  g_iso->add_option("--order", iso_order, "subgroup order")->required();
  g_iso->add_option("--max-det", max_order, "largest discriminant group to enumerate");
  auto* g_dim = graph->add_subcommand("dim", "Smoothing component dimension and exclusion verdict");
  std::int64_t h1 = 0;
  bool taut = false;
  g_dim->add_option("--h1", h1, "h^1 of the logarithmic vector fields")->required();
  g_dim->add_flag("--taut", taut, "the graph is taut");
  for (auto* sc : {g_disc, g_rat, g_screen, g_iso, g_dim}) {
    sc->add_option("FILE", file, "graph JSON")->required();
    sc->add_flag("--json", as_json, "JSON output");
  }
  auto* g_emit = graph->add_subcommand("emit", "Print a built-in graph as JSON");
  std::string emit_family, emit_log;
  int emit_yn = 0;
  bool emit_nontaut = false;
  g_emit->add_option("--family", emit_family, "family graph (with --p)");
  g_emit->add_option("--p", p, "family parameter");
  g_emit->add_option("--log-canonical", emit_log, "log-canonical star of a family");
  g_emit->add_option("--y-n", emit_yn, "the Y_n graph");
  g_emit->add_flag("--rational-nontaut", emit_nontaut, "the rational non-taut H-shaped graph");

  // continued fractions
  auto* cf = app.add_subcommand("cf", "Hirzebruch-Jung continued fractions");
  cf->require_subcommand(1);
  std::string cf_arg;
  auto* cf_expand = cf->add_subcommand("expand", "n/q -> a1,a2,...");
  cf_expand->add_option("FRACTION", cf_arg)->required();
  auto* cf_contract = cf->add_subcommand("contract", "a1,a2,... -> n/q");
  cf_contract->add_option("LIST", cf_arg)->required();

  // cross ratio
  auto* cr = app.add_subcommand("crossratio", "Cross ratios compatible with a permutation of four points");
  std::string perm;
  cr->add_option("--perm", perm, "cycle notation on 1..4, e.g. \"(2 3 4)\"")->required();

  // group queries
  auto* group = app.add_subcommand("group", "Queries on the family's metacyclic group");
  group->require_subcommand(1);
  std::vector<CLI::App*> group_cmds{group->add_subcommand("info", "parameters and Wolf conditions"),
                                    group->add_subcommand("free", "fixed-point freeness on C^dim - {0}"),
                                    group->add_subcommand("classes", "conjugacy classes")};
  for (auto* sc : group_cmds) {
    sc->add_option("--family", fam_name, "A4, B4 or C4")->required();
    sc->add_option("--p", p, "family parameter p >= 1")->required();
    sc->add_option("--variant", variant, "character variant");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (verify->parsed()) {
      VerifyOptions opt;
      opt.max_smooth_p = env_max_p();
      auto r = verify_family(family_id(fam_name, p, variant), opt);
      if (as_json) std::cout << report_json(r).dump(2) << "\n";
      else print_report(r);
      return r.verified ? kOk : kFailed;
    }

    if (g_emit->parsed()) {
      int chosen = !emit_family.empty() + !emit_log.empty() + (emit_yn != 0) + emit_nontaut;
      if (chosen != 1) throw UsageError("emit needs exactly one of --family, --log-canonical, --y-n, --rational-nontaut");
      ResolutionGraph g;
      if (!emit_family.empty()) g = family_graph(family_id(emit_family, p, 1));
      else if (!emit_log.empty()) g = log_canonical_graph(family_id(emit_log, 1, 1).tag);
      else if (emit_yn) {
        if (emit_yn < 1) throw UsageError("--y-n must be >= 1");
        g = y_n_graph(emit_yn);
      } else {
        g = rational_nontaut_graph();
      }
      std::cout << g.to_json().dump() << "\n";
      return kOk;
    }

    if (graph->parsed()) {
      const ResolutionGraph g = load_graph(file);
      json out;
      if (g_disc->parsed()) {
        out["discriminant"] = discriminant(g).get_str();
        if (!as_json) std::cout << discriminant(g).get_str() << "\n";
      } else if (g_rat->parsed()) {
        require_negative_definite(g);
        auto z = fundamental_cycle(g);
        out["rational"] = is_rational(g);
        out["fundamental_cycle"] = z;
        if (!as_json)
          std::cout << "rational=" << yes(is_rational(g)) << "\nfundamental_cycle=" << join(z) << "\n";
      } else if (g_screen->parsed()) {
        auto s = qhd_screen(g);
        out = {{"negative_definite", s.negative_definite},
               {"discriminant", s.discriminant.get_str()},
               {"discriminant_square", s.discriminant_square},
               {"KK", to_string(s.KK)},
               {"KK_integral", s.KK_integral},
               {"rational", s.rational},
               {"sum_d_minus_3", s.sum_d_minus_3},
               {"passes", s.passes()}};
        if (!as_json)
          std::cout << "negative_definite=" << yes(s.negative_definite) << "\ndiscriminant=" << s.discriminant.get_str()
                    << "\ndiscriminant_square=" << yes(s.discriminant_square) << "\nK^2=" << to_string(s.KK)
                    << "\nK^2_integral=" << yes(s.KK_integral) << "\nrational=" << yes(s.rational)
                    << "\nΣ(d_i−3)=" << s.sum_d_minus_3 << "\npasses=" << yes(s.passes()) << "\n";
      } else if (g_iso->parsed()) {
        require_negative_definite(g);
        auto dg = discriminant_group(g);
        std::vector<IsotropicSubgroup> subs;
        try {
          subs = enumerate_self_isotropic(dg, iso_order, max_order);
        } catch (const CapacityError& e) {
          throw UsageError(std::string(e.what()) + " (raise --max-det)");
        }
        std::vector<std::string> factors;
        for (const auto& f : dg.factors) factors.push_back(f.get_str());
        out["group_factors"] = factors;
        out["count"] = subs.size();
        out["subgroups"] = json::array();
        for (const auto& s : subs) out["subgroups"].push_back({{"generators", s.generators}});
        if (!as_json) {
          std::cout << "discriminant group: ";
          for (std::size_t k = 0; k < factors.size(); ++k) std::cout << (k ? " x " : "") << "Z/" << factors[k];
          std::cout << "\ncount " << subs.size() << "\n";
          for (const auto& s : subs) {
            std::cout << "  generated by";
            for (const auto& v : s.generators) std::cout << " (" << join(v) << ")";
            std::cout << "\n";
          }
        }
      } else if (g_dim->parsed()) {
        if (h1 < 0) throw UsageError("--h1 must be >= 0");
        require_negative_definite(g);
        auto dim = smoothing_component_dimension({g, h1, taut});
        auto v = exclusion_verdict(g, taut);
        out = {{"dimension", dim},
               {"sum_d_minus_3", v.sum_d_minus_3},
               {"verdict", v.verdict == Verdict::Excluded ? "EXCLUDED" : "INCONCLUSIVE"},
               {"reason", v.reason}};
        if (!as_json) std::cout << "dimension=" << dim << "\nverdict=" << v.to_string() << "\n";
      }
      if (as_json) std::cout << out.dump(2) << "\n";
      return kOk;
    }

    if (cf_expand->parsed()) {
      auto slash = cf_arg.find('/');
      if (slash == std::string::npos) throw UsageError("expected n/q");
      std::vector<std::int64_t> nq;
      try {
        nq = parse_list(cf_arg.substr(0, slash) + "," + cf_arg.substr(slash + 1));
      } catch (const UsageError&) {
        throw UsageError("expected n/q with integers n > q >= 1");
      }
      std::vector<std::int64_t> a;
      try {
        a = hj_expand(nq[0], nq[1]);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::cout << join(a) << "\n";
      return kOk;
    }
    if (cf_contract->parsed()) {
      CyclicQuotientType t;
      try {
        t = hj_contract(parse_list(cf_arg));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::cout << t.to_string() << "\n";
      return kOk;
    }

    if (cr->parsed()) {
      Perm4 pm;
      try {
        pm = parse_permutation(perm);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::cout << cross_ratio_solutions(pm).to_string() << "\n";
      return kOk;
    }

    if (group->parsed()) {
      const FamilyId f = family_id(fam_name, p, variant);
      const Representation R = family_representation(f);
      const auto& P = R.params;
      if (group_cmds[0]->parsed()) {
        auto w = wolf_conditions(P);
        std::cout << "m=" << P.m << " n=" << P.n << " r=" << P.r << " d=" << P.d << " n'=" << P.n_prime
                  << " |G|=" << P.order() << "\nabelianization=" << abelianization_order(P)
                  << "\nrelations=" << yes(relations_hold(R)) << "\nwolf: n=n'd " << yes(w.n_factors)
                  << ", gcd((r-1)n,m)=1 " << yes(w.coprime) << ", ord(r)=d " << yes(w.order_d)
                  << ", primes of d divide n' " << yes(w.primes_of_d) << "\n";
      } else if (group_cmds[1]->parsed()) {
        auto fr = free_off_origin(R);
        std::cout << "free=" << yes(fr.free) << "\n";
        if (!fr.free) std::cout << "witness " << fr.witness->to_string() << " fixes " << point_to_string(fr.fixed_vector) << "\n";
      } else {
        auto classes = conjugacy_classes(P);
        std::cout << "classes=" << classes.size() << "\n";
        for (const auto& c : classes) std::cout << "  " << c.front().to_string() << " size " << c.size() << "\n";
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
