#include "bruhat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>

#include "bruhat/flagfq.hpp"
#include "bruhat/ordcoh.hpp"
#include "bruhat/padic.hpp"
#include "bruhat/roots.hpp"
#include "bruhat/satake.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string kind = "A";
  int n = 1;
  int q = 2;
  int p = 2;
  int r = 1;
  int m = 1;
  int k = 0;
  int a = 2;
  int d = 1;
  int count = 0;
  std::uint64_t seed = 1;
  bool untwisted = false;
  std::string matrix;
  std::string format = "json";
  std::string out;
};

struct Report {
  Json body;
  bool verdict = true;
};

// Thrown for malformed user input that the parser itself cannot catch.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json header(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

Json perm_json(const weyl::WeylElement& w) {
  Json a = Json::array();
  for (int x : w.perm()) a.push_back(x + 1);
  return a;
}

Json poly_json(const laurent::SymLaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms()) {
    Json t;
    t["exps"] = mono.exps;
    t["vexp"] = mono.vexp;
    if (c.fits_slong_p())
      t["vcoeff"] = c.get_si();
    else
      t["vcoeff"] = c.get_str();
    terms.push_back(std::move(t));
  }
  return terms;
}

Json charpoly_json(const satake::CharPoly& cp) {
  Json coeffs = Json::array();
  for (int k = cp.degree(); k >= 0; --k) {
    Json c;
    c["degree"] = k;
    c["terms"] = poly_json(cp.coeffs[k]);
    coeffs.push_back(std::move(c));
  }
  return coeffs;
}

Json qmatrix_json(const padic::QMatrix& m, int p) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(padic::format_rational(m.at(i, j), p));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json lmatrix_json(const ordcoh::LMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json diagonal_entries(const ordcoh::LMatrix& m) {
  Json d = Json::array();
  for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) d.push_back(m.at(i, i));
  return d;
}

GroupKind kind_of(const Config& c) { return parse_kind(c.kind, c.n); }

// ---- weyl / cells ----

Report weyl_cosets(const Config& c) {
  const GroupKind kind = kind_of(c);
  const auto orbits = weyl::enumerate_double_coset_orbits(kind);
  Report rep{header("weyl cosets")};
  rep.body["kind"] = kind.name();
  rep.body["n"] = kind.n;
  rep.body["count"] = orbits.size();
  std::set<std::vector<int>> reps, expected;
  for (int t = 0; t <= kind.n; ++t) expected.insert(weyl::sigma(kind, t).perm());
  bool tau_constant = true;
  Json list = Json::array();
  for (const auto& orbit : orbits) {
    const auto rep_w = weyl::canonical_rep(orbit.front());
    for (const auto& w : orbit) tau_constant = tau_constant && weyl::tau(w) == weyl::tau(rep_w);
    reps.insert(rep_w.perm());
    Json o;
    o["representative"] = rep_w.cycles();
    o["perm"] = perm_json(rep_w);
    o["tau"] = weyl::tau(rep_w);
    o["orbit_size"] = orbit.size();
    list.push_back(std::move(o));
  }
  rep.body["representatives"] = std::move(list);
  Json checks;
  checks["count_is_n_plus_1"] = static_cast<int>(orbits.size()) == kind.n + 1;
  checks["representatives_are_sigma_k"] = reps == expected;
  checks["tau_constant_on_orbits"] = tau_constant;
  for (const auto& [name, ok] : checks.items()) rep.verdict = rep.verdict && ok.get<bool>();
  rep.body["checks"] = std::move(checks);
  rep.body["verdict"] = rep.verdict;
  return rep;
}

Report cells_dims(const Config& c) {
  const GroupKind kind = kind_of(c);
  const int n = kind.n;
  Report rep{header("cells dims")};
  rep.body["kind"] = kind.name();
  rep.body["n"] = n;
  const auto w0 = weyl::longest_element(kind);
  bool lemma = true, corollary = true, formula = true;
  for (const auto& w : weyl::elements(kind)) {
    lemma = lemma && roots::unipotent_intersection_dim(w) == roots::opposite_cell_dim(w);
    corollary = corollary && roots::standard_unipotent_intersection_dim(w) == roots::cell_dim_by_roots(w * w0);
  }
  Json cells = Json::array();
  for (int t = 0; t <= n; ++t) {
    const auto s = weyl::sigma(kind, t);
    const int expected = kind.is_symplectic() ? t * (2 * n - t + 1) / 2 : t * (2 * n - t);
    const int dim = roots::cell_dim_by_roots(s);
    formula = formula && dim == expected;
    Json o;
    o["tau"] = t;
    o["representative"] = s.cycles();
    o["cell_dim"] = dim;
    o["expected"] = expected;
    o["opposite_cell_dim"] = roots::opposite_cell_dim(s);
    cells.push_back(std::move(o));
  }
  rep.body["cells"] = std::move(cells);
  Json checks;
  checks["unipotent_dim_equals_opposite_cell_dim"] = lemma;
  checks["standard_unipotent_dim_equals_cell_dim_of_w_w0"] = corollary;
  checks["cell_dim_formula"] = formula;
  rep.verdict = lemma && corollary && formula;
  rep.body["checks"] = std::move(checks);
  rep.body["verdict"] = rep.verdict;
  return rep;
}

// ---- flag ----

Json flag_header(const std::string& command, const GroupKind& kind, int q) {
  Json j = header(command);
  j["kind"] = kind.name();
  j["n"] = kind.n;
  j["q"] = q;
  return j;
}

Report flag_census(const Config& c) {
  const GroupKind kind = kind_of(c);
  const fq::Field f(c.q);
  const auto census = flagfq::cell_census(kind, f);
  const bool closure = flagfq::closure_order_check(kind, f);
  Report rep{flag_header("flag census", kind, c.q)};
  Json cells = Json::array();
  for (const auto& [t, count] : census.cells) cells.push_back(Json{{"tau", t}, {"count", count}});
  rep.body["cells"] = std::move(cells);
  rep.body["total"] = census.total;
  Json checks;
  checks["total"] = Json{{"value", census.total}, {"expected", census.expected_total}};
  checks["open_cell"] = Json{{"value", census.open_cell}, {"expected", census.expected_open_cell}};
  checks["orbits_are_tau_fibers"] = closure;
  rep.body["checks"] = std::move(checks);
  rep.verdict = census.ok() && closure;
  rep.body["verdict"] = rep.verdict;
  return rep;
}

Report flag_check(const Config& c, const std::string& command,
                  const std::function<flagfq::CheckReport(GroupKind, const fq::Field&)>& check) {
  const GroupKind kind = kind_of(c);
  const fq::Field f(c.q);
  const auto result = check(kind, f);
  Report rep{flag_header(command, kind, c.q)};
  rep.body["checked"] = result.checked;
  rep.body["verdict"] = result.ok;
  if (!result.ok) rep.body["failure"] = result.failure;
  rep.verdict = result.ok;
  return rep;
}

// ---- satake ----

Report satake_verify(const Config& c) {
  const GroupKind kind = kind_of(c);
  const auto v = satake::verify_determinant_factorization(kind, !c.untwisted);
  const laurent::VarList ring = kind.is_symplectic() ? satake::real_m_ring(kind.n) : satake::unitary_m_ring(kind.n);
  Report rep{header("satake verify")};
  rep.body["case"] = kind.is_symplectic() ? "real" : "unitary";
  rep.body["kind"] = kind.name();
  rep.body["n"] = kind.n;
  rep.body["twisted"] = !c.untwisted;
  rep.body["variables"] = ring;
  rep.body["g_side"] = charpoly_json(v.g_side);
  rep.body["m_side"] = charpoly_json(v.m_side);
  rep.body["verdict"] = v.verdict;
  if (!v.verdict) rep.body["first_difference"] = v.first_difference;
  rep.verdict = v.verdict;
  return rep;
}

// ---- padic ----

padic::QMatrix parse_matrix(const std::string& text, int size, int p) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError("--matrix is not valid JSON");
  }
  std::vector<Json> flat;
  if (!j.is_array()) throw ConfigError("--matrix must be a JSON array");
  for (const auto& x : j) {
    if (x.is_array())
      for (const auto& y : x) flat.push_back(y);
    else
      flat.push_back(x);
  }
  if (static_cast<int>(flat.size()) != size * size)
    throw ConfigError("--matrix needs " + std::to_string(size * size) + " entries, got " + std::to_string(flat.size()));
  padic::QMatrix m(size, size);
  for (int i = 0; i < size * size; ++i) {
    const Json& x = flat[i];
    std::string s;
    if (x.is_string())
      s = x.get<std::string>();
    else if (x.is_number_integer())
      s = std::to_string(x.get<long long>());
    else
      throw ConfigError("--matrix entries must be strings \"a/p^k\" or integers");
    m.at(i / size, i % size) = padic::parse_rational(s, p);
  }
  return m;
}

Json padic_header(const std::string& command, const GroupKind& kind, int p) {
  Json j = header(command);
  j["kind"] = kind.name();
  j["n"] = kind.n;
  j["p"] = p;
  return j;
}

Report padic_h(const Config& c) {
  const GroupKind kind = kind_of(c);
  std::mt19937_64 rng(c.seed);
  const padic::BlockMatrix g = c.matrix.empty()
                                   ? padic::random_element(kind, c.p, rng)
                                   : padic::BlockMatrix(kind, c.p, parse_matrix(c.matrix, kind.degree(), c.p));
  const auto h = padic::h_invariant(g);
  Report rep{padic_header("padic h", kind, c.p)};
  rep.body["source"] = c.matrix.empty() ? "sample" : "matrix";
  rep.body["matrix"] = qmatrix_json(g.matrix(), c.p);
  rep.body["h"] = h.str();
  rep.body["in_P_Gamma1"] = Json{{"m", c.m}, {"value", padic::in_P_Gamma1(g, c.m)}};
  if (g.integral()) {
    rep.body["levels"] = Json{{"m", c.m},
                              {"Gamma0", padic::in_level(g, padic::Level::Gamma0, c.m)},
                              {"Gamma1", padic::in_level(g, padic::Level::Gamma1, c.m)},
                              {"Gamma", padic::in_level(g, padic::Level::GammaFull, c.m)}};
  }
  const auto shifted = padic::h_invariant(g * padic::gamma(kind, c.p, c.k));
  const auto expected = h + (kind.is_symplectic() ? 2L * c.k : static_cast<long>(c.k));
  rep.verdict = shifted == expected;
  rep.body["shift"] = Json{{"k", c.k}, {"h", shifted.str()}, {"expected", expected.str()}, {"holds", rep.verdict}};
  rep.body["verdict"] = rep.verdict;
  return rep;
}

Report padic_factor(const Config& c) {
  const GroupKind kind = kind_of(c);
  std::mt19937_64 rng(c.seed);
  const padic::BlockMatrix g = c.matrix.empty()
                                   ? padic::random_gamma1(kind, c.p, c.m, rng)
                                   : padic::BlockMatrix(kind, c.p, parse_matrix(c.matrix, kind.degree(), c.p));
  Report rep{padic_header("padic factor", kind, c.p)};
  rep.body["m"] = c.m;
  rep.body["source"] = c.matrix.empty() ? "sample" : "matrix";
  rep.body["matrix"] = qmatrix_json(g.matrix(), c.p);
  const auto h = padic::h_invariant(g);
  rep.body["h"] = h.str();
  if (h < padic::ExtInt(c.m)) {
    rep.verdict = false;
    rep.body["verdict"] = false;
    rep.body["failure"] = "h(g) < m: g is not in P(Q_p) Gamma1(p^m)";
    return rep;
  }
  const auto f = padic::factor_P_Gamma1(g, c.m);
  rep.body["p_part"] = qmatrix_json(f.p_part.matrix(), c.p);
  rep.body["gamma1_part"] = qmatrix_json(f.gamma1_part.matrix(), c.p);
  Json checks;
  checks["reassembles"] = f.p_part * f.gamma1_part == g;
  checks["p_part_block_upper"] = padic::is_block_upper(f.p_part);
  checks["gamma1_part_in_level"] = padic::in_level(f.gamma1_part, padic::Level::Gamma1, c.m);
  if (kind.is_symplectic())
    checks["symplectic"] = padic::is_symplectic(f.p_part.matrix()) && padic::is_symplectic(f.gamma1_part.matrix());
  for (const auto& [name, ok] : checks.items()) rep.verdict = rep.verdict && ok.get<bool>();
  rep.body["checks"] = std::move(checks);
  rep.body["verdict"] = rep.verdict;
  return rep;
}

// ---- ordcoh ----

Json ordcoh_header(const std::string& command, const Config& c, const ordcoh::Lambda& lam) {
  Json j = header(command);
  j["d"] = c.d;
  j["p"] = c.p;
  j["r"] = c.r;
  j["a"] = c.a;
  j["lambda"] = lam.str();
  return j;
}

Report ordcoh_ranks(const Config& c) {
  const ordcoh::Lambda lam(c.p, c.r);
  const auto h = ordcoh::koszul_cohomology(c.d, lam);
  const auto cores = ordcoh::cores_kunneth(c.d, c.a, lam);
  Report rep{ordcoh_header("ordcoh ranks", c, lam)};
  rep.body["ranks"] = h.ranks();
  Json degrees = Json::array();
  bool ranks_ok = true, cores_ok = true;
  for (int i = 0; i <= c.d; ++i) {
    const auto expected_rank = ordcoh::binomial(c.d, i);
    ranks_ok = ranks_ok && static_cast<std::uint64_t>(h.ranks()[i]) == expected_rank;
    const std::int64_t scalar = lam.pow_p(c.a * (c.d - i));
    bool diagonal_ok = cores[i] == ordcoh::LMatrix::diagonal(lam, std::vector<std::int64_t>(expected_rank, scalar));
    cores_ok = cores_ok && diagonal_ok;
    degrees.push_back(Json{{"i", i},
                           {"rank", h.ranks()[i]},
                           {"expected_rank", expected_rank},
                           {"cores_scalar", cores[i].rows() > 0 ? cores[i].at(0, 0) : 0},
                           {"expected_cores_scalar", scalar},
                           {"cores_diagonal", diagonal_ok},
                           {"cores", diagonal_entries(cores[i])}});
  }
  rep.body["degrees"] = std::move(degrees);
  rep.body["checks"] = Json{{"ranks_binomial", ranks_ok}, {"cores_is_p_power", cores_ok}};
  rep.verdict = ranks_ok && cores_ok;
  rep.body["verdict"] = rep.verdict;
  return rep;
}

Report ordcoh_ordinary(const Config& c) {
  const ordcoh::Lambda lam(c.p, c.r);
  if (c.count < 0) throw ConfigError("--count must be >= 0");
  Report rep{ordcoh_header("ordcoh ordinary", c, lam)};
  const auto hecke = ordcoh::hecke_gamma(c.d, c.a, lam);
  Json degrees = Json::array();
  std::vector<int> ranks;
  bool checks_ok = true;
  for (int i = 0; i <= c.d; ++i) {
    const auto pr = ordcoh::ordinary_projector(hecke[i]);
    const auto chk = ordcoh::check_projector(hecke[i], pr);
    checks_ok = checks_ok && chk.all();
    ranks.push_back(pr.e.rank_mod_p());
    degrees.push_back(Json{{"i", i}, {"k", pr.k}, {"rank", ranks.back()}, {"projector", lmatrix_json(pr.e)}});
  }
  std::vector<int> expected(c.d + 1, 0);
  expected.back() = 1;
  rep.body["degrees"] = std::move(degrees);
  rep.body["ordinary_ranks"] = ranks;
  std::mt19937_64 rng(c.seed);
  int random_ok = 0;
  for (int s = 0; s < c.count; ++s) {
    const int size = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto U = ordcoh::random_endo(lam, size, rng);
    if (ordcoh::check_projector(U, ordcoh::ordinary_projector(U)).all()) ++random_ok;
  }
  rep.body["random_endomorphisms"] = Json{{"count", c.count}, {"seed", c.seed}, {"passed", random_ok}};
  rep.body["checks"] = Json{{"ranks_top_degree_only", ranks == expected},
                            {"projector_laws", checks_ok},
                            {"random_projector_laws", random_ok == c.count}};
  rep.verdict = ranks == expected && checks_ok && random_ok == c.count;
  rep.body["verdict"] = rep.verdict;
  return rep;
}

// ---- output ----

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

void flatten(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else {
    out += csv_field(prefix) + "," + csv_field(j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

std::string render(const Json& body, const std::string& format) {
  if (format == "csv") {
    std::string out = "key,value\n";
    flatten(body, "", out);
    return out;
  }
  return body.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Bruhat cells, Satake transforms, p-adic cosets and ordinary projectors", "bruhat-cli"};
  app.require_subcommand(1);

  std::string group, command;
  std::function<Report(const Config&)> handler;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<Report(const Config&)> fn) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "report path");
    sub->callback([&, parent, name, fn] {
      group = parent->get_name();
      command = name;
      handler = fn;
    });
    return sub;
  };
  auto kind_opts = [&](CLI::App* sub) {
    sub->add_option("--kind", cfg.kind, "A (GL_2n) or C (Sp_2n)")->required()->check(CLI::IsMember({"A", "C"}));
    sub->add_option("--n", cfg.n, "half-rank")->required()->check(CLI::Range(1, 8));
  };

  CLI::App* weyl_app = app.add_subcommand("weyl", "Weyl group double cosets");
  weyl_app->require_subcommand(1);
  kind_opts(leaf(weyl_app, "cosets", "W_I double cosets", weyl_cosets));

  CLI::App* cells_app = app.add_subcommand("cells", "Cell dimensions from roots");
  cells_app->require_subcommand(1);
  kind_opts(leaf(cells_app, "dims", "dimension identities", cells_dims));

  CLI::App* flag_app = app.add_subcommand("flag", "Finite-field flag varieties");
  flag_app->require_subcommand(1);
  for (auto [name, help, fn] : std::vector<std::tuple<std::string, std::string, std::function<Report(const Config&)>>>{
           {"census", "tau-cell census", flag_census},
           {"check-cover", "covering lemma sweep over G(F_q)",
            [](const Config& c) { return flag_check(c, "flag check-cover", flagfq::cover_lemma_check); }},
           {"check-finding-j", "existence of J for every point",
            [](const Config& c) { return flag_check(c, "flag check-finding-j", flagfq::finding_J_check); }}}) {
    CLI::App* sub = leaf(flag_app, name, help, fn);
    kind_opts(sub);
    sub->add_option("--q", cfg.q, "field size (2, 3 or 5)")->check(CLI::IsMember({2, 3, 5}));
  }

  CLI::App* satake_app = app.add_subcommand("satake", "Satake transforms");
  satake_app->require_subcommand(1);
  CLI::App* verify = leaf(satake_app, "verify", "characteristic polynomial factorization", satake_verify);
  kind_opts(verify);
  verify->add_flag("--untwisted", cfg.untwisted, "set the twist characters to 1");

  CLI::App* padic_app = app.add_subcommand("padic", "p-adic cosets");
  padic_app->require_subcommand(1);
  for (auto [name, help, fn] : std::vector<std::tuple<std::string, std::string, std::function<Report(const Config&)>>>{
           {"h", "h-invariant, levels and the gamma shift", padic_h},
           {"factor", "P(Q_p) Gamma1(p^m) factorization", padic_factor}}) {
    CLI::App* sub = leaf(padic_app, name, help, fn);
    kind_opts(sub);
    sub->add_option("--p", cfg.p, "prime")->check(CLI::Range(2, 1000));
    sub->add_option("--m", cfg.m, "level exponent")->check(CLI::Range(1, 64));
    sub->add_option("--k", cfg.k, "gamma exponent")->check(CLI::Range(0, 64));
    sub->add_option("--seed", cfg.seed, "sampler seed when --matrix is absent");
    sub->add_option("--matrix", cfg.matrix, "JSON array of entries \"a\", \"a/b\" or \"a/p^k\"");
  }

  CLI::App* ordcoh_app = app.add_subcommand("ordcoh", "Koszul cohomology and ordinary projectors");
  ordcoh_app->require_subcommand(1);
  for (auto [name, help, fn] : std::vector<std::tuple<std::string, std::string, std::function<Report(const Config&)>>>{
           {"ranks", "ranks and corestriction", ordcoh_ranks},
           {"ordinary", "ordinary part of h_gamma", ordcoh_ordinary}}) {
    CLI::App* sub = leaf(ordcoh_app, name, help, fn);
    sub->add_option("--d", cfg.d, "rank of Z_p^d")->required()->check(CLI::Range(0, ordcoh::kMaxRank));
    sub->add_option("--p", cfg.p, "prime")->check(CLI::Range(2, 1000));
    sub->add_option("--r", cfg.r, "coefficients Z/p^r")->check(CLI::Range(1, 30));
    sub->add_option("--a", cfg.a, "subgroup exponent")->check(CLI::Range(1, 20));
    if (name == "ordinary") {
      sub->add_option("--count", cfg.count, "random endomorphisms to test")->check(CLI::Range(0, 100000));
      sub->add_option("--seed", cfg.seed, "seed for random endomorphisms");
    }
  }

  // CLI11 consumes a reversed argument list without the program name.
  std::vector<std::string> args(argv.rbegin(), argv.rend());
  if (!args.empty()) args.pop_back();
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidConfig;
  }
  if (!handler) {
    err << "error: no command given\n";
    return kInvalidConfig;
  }

  Report rep;
  try {
    rep = handler(cfg);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }

  const std::string text = render(rep.body, cfg.format);
  std::string path = cfg.out;
  if (path.empty()) {
    if (const char* dir = std::getenv("BRUHAT_REPORT_DIR"); dir != nullptr && *dir != '\0')
      path = std::string(dir) + "/" + group + "-" + command + "." + cfg.format;
  }
  if (path.empty()) {
    out << text;
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!(f << text)) {
      err << "error: cannot write report to " << path << "\n";
      return kInvalidConfig;
    }
  }
  return rep.verdict ? kPass : kVerificationFailed;
}

}  // namespace bruhat::cli
