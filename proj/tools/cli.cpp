#include "cli.hpp"

#include <chrono>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "lendens/lendens.hpp"
#include "monoid_spec.hpp"

namespace lendens::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Common {
  bool json = false;
  bool timing = false;
  bool csv = false;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  std::int64_t bound = -1;
  std::string element;
};

void add_output_flags(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json, "Emit the JSON report");
  sub->add_flag("--timing", c.timing, "Include wall-clock timing in the report");
  sub->add_option("--budget", c.budget, "Node budget for enumerations")->check(CLI::PositiveNumber);
  sub->add_option("--threads", c.threads, "Worker threads for scans")->check(CLI::Range(1u, 256u));
}

std::string frac(const Rational& r) { return r.to_fraction_string(); }

Json opt_frac(const std::optional<Rational>& r) { return r ? Json(frac(*r)) : Json(nullptr); }

Json length_json(const LengthSet& ls) { return Json(ls.values()); }

Json stats_json(const Monoid& m, const Element& x, const LengthSet& ls) {
  auto s = length_stats(ls);
  Json j;
  j["element"] = m.format(x);
  j["length_set"] = length_json(ls);
  j["min_length"] = s.min_len;
  j["max_length"] = s.max_len;
  j["elasticity"] = frac(s.elasticity);
  j["delta"] = s.delta;
  j["ld"] = opt_frac(s.ld);
  j["interval"] = ls.is_interval();
  return j;
}

/// Report assembly and rendering.
struct Report {
  std::string command;
  std::vector<std::string> argv;
  Json input = Json::object();
  Json results = Json::object();
  bool complete = true;
  bool under_approximation = false;
  std::optional<double> seconds;

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["argv"] = argv;
    j["input"] = input;
    j["results"] = results;
    j["flags"] = {{"complete", complete}, {"under_approximation", under_approximation}};
    if (seconds) j["timing"] = {{"seconds", *seconds}};
    return j;
  }
};

void render_human(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      render_human(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      render_human(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  out << prefix << ": ";
  if (j.is_string()) {
    out << j.get<std::string>();
  } else if (j.is_array()) {
    out << "{";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out << ",";
      out << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
    }
    out << "}";
  } else if (j.is_null()) {
    out << "-";
  } else {
    out << j.dump();
  }
  out << "\n";
}

void emit(const Report& r, const Common& c, std::ostream& out) {
  if (c.json) {
    out << r.to_json().dump(2) << "\n";
    return;
  }
  out << r.command << "\n";
  render_human(r.input, "input", out);
  render_human(r.results, "", out);
  out << "complete: " << (r.complete ? "true" : "false") << "\n";
  out << "under_approximation: " << (r.under_approximation ? "true" : "false") << "\n";
  if (r.seconds) out << "seconds: " << *r.seconds << "\n";
}

void emit_csv(const std::vector<std::pair<std::int64_t, std::optional<Rational>>>& rows,
              std::ostream& out) {
  out << "n,ld_num,ld_den\n";
  for (const auto& [n, ld] : rows) {
    out << n << ",";
    if (ld) out << ld->numerator() << "," << ld->denominator();
    else out << ",";
    out << "\n";
  }
}

ScanOptions scan_options(const Common& c) { return {c.budget, c.threads}; }

std::int64_t bound_or(const Common& c, std::int64_t fallback) { return c.bound >= 0 ? c.bound : fallback; }

Json element_section(const Monoid& m, const Element& x, bool list_factorizations,
                     std::uint64_t budget, Report& r) {
  Json j = stats_json(m, x, length_set(m, x));
  if (list_factorizations) {
    auto fs = factorizations(m, x, budget);
    r.complete = r.complete && fs.complete;
    Json zs = Json::array();
    for (const auto& z : fs.factorizations) zs.push_back(z.exponents);
    j["factorization_count"] = fs.size();
    j["factorizations"] = zs;
  }
  return j;
}

Json atoms_json(const Monoid& m) {
  Json atoms = Json::array();
  for (std::size_t i = 0; i < m.atom_count(); ++i) atoms.push_back(m.atom_name(i));
  return atoms;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Length sets, delta sets, length density and related factorization invariants"};
  app.name("lendens");
  app.require_subcommand(1);

  Common c;
  bool list_factorizations = false;
  std::string spec, kind, restrict_set, n_list, tame_wrt, base_text;
  std::string tol_text = "1/100";
  std::int64_t chain_i = 0, chain_t = 1, max_n = 10, psi = 0, level = -1;
  bool tame = false;

  auto* ns = app.add_subcommand("ns", "Numerical semigroup, e.g. 6,9,20");
  ns->add_option("generators", spec, "Comma separated generators")->required();
  auto* affine = app.add_subcommand("affine", "Affine semigroup, e.g. \"(4,0,0);(7,0,0)\"");
  affine->add_option("generators", spec, "Semicolon separated vectors")->required();
  auto* block = app.add_subcommand("block", "Block monoid over a finite abelian group, e.g. Z5");
  block->add_option("group", spec, "Group such as Z4 or Z2xZ2xZ3")->required();
  block->add_option("--restrict", restrict_set, "Subset of the group, e.g. \"(1);(4)\"");
  auto* mabc = app.add_subcommand("mabc", "M(a,b,c) truncation, spec a,b,c,I");
  mabc->add_option("spec", spec, "a,b,c,I with c rational")->required();
  mabc->add_option("--i", chain_i, "Chain index for L(q_{i,ia}^{t ia})");
  mabc->add_option("--t", chain_t, "Power t")->check(CLI::PositiveNumber);
  auto* chain = app.add_subcommand("chain", "Chain monoid a1^3 = a2^4 = ... = ai^{2i}");
  chain->add_option("i", spec, "Number of atoms (>= 3)")->required();
  auto* infdelta = app.add_subcommand("infdelta", "Numerical semigroup <2i,3i,6i+1>");
  infdelta->add_option("i", spec, "Family index (>= 2)")->required();
  auto* puiseux = app.add_subcommand("puiseux", "Puiseux monoid, e.g. 4/3,8/5,800/1201");
  puiseux->add_option("atoms", spec, "Comma separated positive rationals");
  puiseux->add_option("--noasym", level, "Use the oscillating example at level 0 or 1");
  puiseux->add_option("--n", n_list, "Comma separated n for the series ld(n * base)");
  puiseux->add_option("--base", base_text, "Base element of the series (default 8)");
  puiseux->add_flag("--csv", c.csv, "Emit the series as n,ld_num,ld_den");

  auto* asym = app.add_subcommand("asym", "ld(x^n) for n = 1..N and the predicted limit");
  auto* search = app.add_subcommand("search", "Delta set and minimum ld over a bounded scan");
  auto* betti = app.add_subcommand("betti", "Betti elements of a bounded scan and their ld");
  auto* catenary = app.add_subcommand("catenary", "Catenary (and tame) degree of an element");
  for (auto* sub : {asym, search, betti, catenary}) {
    sub->add_option("kind", kind, "ns, affine, block, puiseux, noasym, chain, infdelta, mabc, sum")
        ->required();
    sub->add_option("spec", spec, "Monoid spec in the kind's grammar")->required();
    sub->add_option("--restrict", restrict_set, "Subset of the group (block only)");
  }
  for (auto* sub : {search, betti}) {
    sub->add_option("--bound", c.bound, "Scan bound")->check(CLI::NonNegativeNumber);
  }
  asym->add_option("--element", c.element, "Base element x")->required();
  asym->add_option("--n", max_n, "Largest power")->check(CLI::PositiveNumber);
  asym->add_option("--tol", tol_text, "Convergence tolerance (rational)");
  asym->add_flag("--tame", tame, "Measure T and check the two-sided bound for n >= psi");
  asym->add_option("--psi", psi, "Override psi for --tame")->check(CLI::PositiveNumber);
  asym->add_flag("--csv", c.csv, "Emit the terms as n,ld_num,ld_den");
  catenary->add_option("--element", c.element, "Element")->required();
  catenary->add_option("--tame-wrt", tame_wrt, "Factorization x, e.g. \"(0,0,1)\", for t(element, x)");

  for (auto* sub : {ns, affine, block, mabc, chain, infdelta, puiseux}) {
    sub->add_option("--element", c.element, "Element to analyse");
    sub->add_flag("--factorizations", list_factorizations, "List Z(x)");
  }
  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) add_output_flags(sub, c);

  std::vector<std::string> argv_store{"lendens"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInput;
  }

  auto started = std::chrono::steady_clock::now();
  Report r;
  r.argv = args;
  try {
    CLI::App* sub = app.get_subcommands().front();
    r.command = sub->get_name();
    const std::string& cmd = r.command;

    if (cmd == "ns" || cmd == "affine" || cmd == "block" || cmd == "chain" || cmd == "infdelta" ||
        (cmd == "puiseux" && n_list.empty())) {
      std::string k = cmd;
      std::string s = spec;
      if (cmd == "puiseux" && level >= 0) {
        k = "noasym";
        s = std::to_string(level);
      } else if (cmd == "puiseux" && spec.empty()) {
        throw Error(ErrorCode::kParseError, "puiseux needs atoms or --noasym LEVEL");
      }
      auto p = parse_monoid(k, s, restrict_set);
      const Monoid& m = *p.monoid;
      r.input = {{"kind", k}, {"spec", s}};
      if (!restrict_set.empty()) r.input["restrict"] = restrict_set;
      r.results["monoid"] = m.describe();
      r.results["atom_count"] = m.atom_count();
      r.results["atoms"] = atoms_json(m);
      if (auto* b = dynamic_cast<const BlockMonoid*>(&m)) {
        r.results["group"] = b->group().to_string();
        r.results["invariant_factors"] = b->group().invariant_factors();
        r.results["order"] = b->group().order();
        r.results["davenport"] = b->davenport_constant();
      }
      if (auto* fp = dynamic_cast<const FinitePresentation*>(&m)) {
        r.results["grading"] = fp->grading();
      }
      std::string text = c.element;
      if (text.empty() && cmd == "chain") text = "a1^3";
      if (text.empty() && cmd == "infdelta") {
        std::int64_t i = parse_int(spec);
        text = std::to_string(i * (6 * i + 1));
      }
      if (!text.empty()) {
        Element x = p.parse_element(text);
        r.input["element"] = text;
        r.results["element"] = element_section(m, x, list_factorizations, c.budget, r);
      }
    } else if (cmd == "puiseux") {
      std::string k = level >= 0 ? "noasym" : "puiseux";
      std::string s = level >= 0 ? std::to_string(level) : spec;
      if (k == "puiseux" && s.empty()) throw Error(ErrorCode::kParseError, "puiseux needs atoms or --noasym LEVEL");
      auto p = parse_monoid(k, s);
      Rational base = base_text.empty() ? Rational(8) : Rational::parse(base_text);
      r.input = {{"kind", k}, {"spec", s}, {"base", frac(base)}, {"n", n_list}};
      r.results["monoid"] = p.monoid->describe();
      auto ns_values = parse_int_list(n_list);
      std::sort(ns_values.begin(), ns_values.end());
      ns_values.erase(std::unique(ns_values.begin(), ns_values.end()), ns_values.end());
      std::vector<std::pair<std::int64_t, std::optional<Rational>>> rows;
      Json series = Json::array();
      for (auto n : ns_values) {
        if (n < 1) throw Error(ErrorCode::kInvalidArgument, "series n must be positive");
        Element x = Element::rational(base * Rational(n));
        LengthSet ls = length_set(*p.monoid, x);
        auto ld = length_density(ls);
        rows.emplace_back(n, ld);
        series.push_back({{"n", n},
                          {"element", p.monoid->format(x)},
                          {"ld", opt_frac(ld)},
                          {"min_length", ls.min()},
                          {"max_length", ls.max()},
                          {"size", ls.size()}});
      }
      r.results["series"] = series;
      if (c.csv) {
        emit_csv(rows, out);
        return 0;
      }
    } else if (cmd == "mabc") {
      auto mspec = parse_mabc(spec);
      r.input = {{"kind", "mabc"}, {"spec", spec}};
      r.results["truncation"] = mspec.truncation;
      if (chain_i > 0) {
        r.input["i"] = chain_i;
        r.input["t"] = chain_t;
        LengthSet ls = mabc_power_lengthset(mspec, chain_i, chain_t, c.budget);
        Json j;
        j["i"] = chain_i;
        j["t"] = chain_t;
        j["k"] = mabc_k(mspec, chain_i);
        auto s = length_stats(ls);
        j["length_set"] = length_json(ls);
        j["elasticity"] = frac(s.elasticity);
        j["delta"] = s.delta;
        j["ld"] = opt_frac(s.ld);
        r.results["power"] = j;
      } else {
        Json chains = Json::array();
        for (std::int64_t i = 1; i <= mspec.truncation; ++i) {
          LengthSet ls = mabc_power_lengthset(mspec, i, 1, c.budget);
          auto s = length_stats(ls);
          chains.push_back({{"i", i},
                            {"k", mabc_k(mspec, i)},
                            {"length_set", length_json(ls)},
                            {"elasticity", frac(s.elasticity)},
                            {"ld", opt_frac(s.ld)}});
        }
        r.results["chains"] = chains;
      }
      if (!c.element.empty()) {
        auto p = parse_monoid("mabc", spec);
        r.input["element"] = c.element;
        r.results["element"] =
            element_section(*p.monoid, p.parse_element(c.element), list_factorizations, c.budget, r);
      }
    } else {
      auto p = parse_monoid(kind, spec, restrict_set);
      const Monoid& m = *p.monoid;
      r.input = {{"kind", kind}, {"spec", spec}};
      if (!restrict_set.empty()) r.input["restrict"] = restrict_set;
      r.results["monoid"] = m.describe();
      auto opts = scan_options(c);
      if (cmd == "search") {
        std::int64_t bound = bound_or(c, p.default_bound);
        r.input["bound"] = bound;
        r.under_approximation = true;
        auto deltas = delta_scan(m, bound, opts);
        auto rep = ld_search(m, bound, opts);
        r.results["delta_scan"] = deltas;
        r.results["minimum_ld"] = frac(rep.minimum_ld);
        r.results["witness"] = m.format(rep.witness);
        r.results["witness_length_set"] = length_json(rep.witness_lengths);
        r.results["max_delta_seen"] = rep.max_delta_seen;
        r.results["lower_bound_certificate"] = frac(rep.lower_bound_certificate);
        r.results["accepted_within_scan"] = rep.accepted_within_scan;
        r.results["elements_scanned"] = rep.elements_scanned;
        r.results["ld_elements"] = rep.ld_elements;
      } else if (cmd == "betti") {
        std::int64_t bound = bound_or(c, p.default_bound);
        r.input["bound"] = bound;
        r.under_approximation = true;
        auto rep = betti_ld_test(m, bound, opts);
        Json list = Json::array();
        for (const auto& b : rep.betti) {
          list.push_back({{"element", m.format(b.element)},
                          {"length_set", length_json(b.lengths)},
                          {"ld", opt_frac(b.ld)}});
        }
        r.results["betti"] = list;
        r.results["minimum_ld"] = frac(rep.search.minimum_ld);
        r.results["witness"] = m.format(rep.search.witness);
        r.results["max_delta_seen"] = rep.search.max_delta_seen;
        r.results["equals_inverse_max_delta"] = rep.equals_inverse_max_delta;
        r.results["attained_at_betti"] = rep.attained_at_betti;
        r.results["betti_witness"] =
            rep.betti_witness ? Json(m.format(*rep.betti_witness)) : Json(nullptr);
      } else if (cmd == "catenary") {
        Element x = p.parse_element(c.element);
        r.input["element"] = c.element;
        auto fs = factorizations(m, x, c.budget);
        if (!fs.complete) {
          throw Error(ErrorCode::kBudgetExceeded, "factorizations of " + m.format(x) + " exceed budget");
        }
        r.results["element"] = m.format(x);
        r.results["factorization_count"] = fs.size();
        r.results["catenary_degree"] = catenary_degree(fs);
        r.results["graph_components"] = graph_components(fs).component_count();
        if (!tame_wrt.empty()) {
          Factorization z(parse_vector(tame_wrt));
          auto t = tame_degree(fs, z);
          r.input["tame_wrt"] = tame_wrt;
          r.results["tame_degree"] = t.degree;
          r.results["tame_adjusted"] = t.adjusted;
        }
      } else if (cmd == "asym") {
        Element x = p.parse_element(c.element);
        Rational tol = Rational::parse(tol_text);
        r.input["element"] = c.element;
        r.input["n"] = max_n;
        r.input["tol"] = frac(tol);
        r.under_approximation = true;
        auto rep = asymptotic_ld(m, x, max_n, tol, opts);
        std::vector<std::pair<std::int64_t, std::optional<Rational>>> rows;
        Json terms = Json::array();
        for (const auto& t : rep.terms) {
          rows.emplace_back(t.n, t.ld);
          terms.push_back({{"n", t.n}, {"ld", opt_frac(t.ld)}, {"length_set", length_json(t.lengths)}});
        }
        r.results["terms"] = terms;
        r.results["delta_union"] = rep.delta_union;
        r.results["min_delta"] = rep.min_delta ? Json(*rep.min_delta) : Json(nullptr);
        r.results["predicted_limit"] = opt_frac(rep.predicted_limit);
        r.results["converged"] = rep.converged;
        r.results["divisors_examined"] = rep.divisors_examined;
        r.results["divisors_complete"] = rep.divisors_complete;
        if (tame && rep.min_delta) {
          std::int64_t d = *rep.min_delta;
          std::optional<std::int64_t> chosen = psi > 0 ? std::optional<std::int64_t>(psi)
                                                       : default_psi(m, x, d, max_n);
          Json sw;
          sw["d"] = d;
          sw["psi"] = chosen ? Json(*chosen) : Json(nullptr);
          if (chosen) {
            std::int64_t t_measured = measured_tame_constant(m, x, *chosen, max_n, opts);
            sw["T"] = t_measured;
            Json checks = Json::array();
            for (std::int64_t n = *chosen; n <= max_n; ++n) {
              const auto& term = rep.terms[static_cast<std::size_t>(n - 1)];
              auto bounds = sandwich_bounds(n, d, Rational(t_measured));
              bool holds = term.ld && bounds.lower <= *term.ld && *term.ld <= bounds.upper;
              checks.push_back({{"n", n},
                                {"lower", frac(bounds.lower)},
                                {"ld", opt_frac(term.ld)},
                                {"upper", frac(bounds.upper)},
                                {"holds", holds}});
            }
            sw["checks"] = checks;
          }
          r.results["sandwich"] = sw;
        }
        if (c.csv) {
          emit_csv(rows, out);
          return 0;
        }
      }
    }
  } catch (const Error& e) {
    err << "lendens: " << e.what() << "\n";
    return e.code() == ErrorCode::kBudgetExceeded || e.code() == ErrorCode::kIncompleteSet
               ? kExitBudget
               : kExitInput;
  } catch (const std::exception& e) {
    err << "lendens: " << e.what() << "\n";
    return kExitInput;
  }
  if (c.timing) {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  }
  emit(r, c, out);
  return 0;
}

}  // namespace lendens::cli
