#include "wrl/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "wrl/asymptotics.hpp"
#include "wrl/csl.hpp"
#include "wrl/dirichlet.hpp"
#include "wrl/highdim.hpp"
#include "wrl/sublattice.hpp"

namespace wrl::cli {

using json = nlohmann::ordered_json;

unsigned default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    unsigned w = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), w);
    if (ec == std::errc() && ptr == s.data() + s.size() && w > 0) return w;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

constexpr const char* kCslScope =
    "Only reflections whose mirror line passes through a lattice vector are searched; mirrors along "
    "directions that contain no lattice vector are outside the scan.";

// ---------------------------------------------------------------- parsing helpers

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

std::int64_t parse_int(const std::string& text, const char* what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument(std::string("bad ") + what + ": '" + text + "'");
  return v;
}

PlanarLattice resolve_lattice(const RunConfig& c) {
  if (c.lattice == "square") return PlanarLattice::square();
  if (c.lattice == "triangle") return PlanarLattice::triangle();
  std::string text = c.lattice;
  if (c.lattice == "file") {
    if (c.gram_file.empty()) throw std::invalid_argument("--lattice file needs --gram-file");
    std::ifstream in(c.gram_file);
    if (!in) throw std::invalid_argument("cannot read " + c.gram_file);
    std::getline(in, text);
  }
  std::erase_if(text, [](unsigned char ch) { return std::isspace(ch); });
  return PlanarLattice::from_gram(parse_gram(text, c.radicand), text);
}

ShapePredicate resolve_predicate(const std::string& name, const PlanarLattice& lattice) {
  if (name == "wr") return ShapePredicate::well_rounded();
  if (name == "similar") return ShapePredicate::similar_to(lattice);
  for (ShapeClass s : {ShapeClass::Square, ShapeClass::Hexagonal, ShapeClass::RhombicWR, ShapeClass::RhombicNonWR,
                       ShapeClass::Rectangular, ShapeClass::Oblique})
    if (name == to_string(s)) return ShapePredicate::shape(s);
  throw std::invalid_argument("unknown predicate '" + name + "'");
}

void require_positive(std::int64_t v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be positive");
}

// ---------------------------------------------------------------- output helpers

json big_to_json(const BigInt& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(z);
  return to_string(z);
}

json rational_matrix_json(const RationalMatrix2& m) {
  return json::array({json::array({to_string(m.m11), to_string(m.m12)}),
                      json::array({to_string(m.m21), to_string(m.m22)})});
}

json reflection_json(const ReflectionWitness& r) {
  json j;
  j["axis"] = r.axis;
  j["matrix"] = rational_matrix_json(r.matrix);
  j["sigma"] = big_to_json(r.sigma);
  return j;
}

/// Rows of scalar cells; CSV prints strings bare and numbers in JSON notation.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<json>> rows;

  void write(std::ostream& os, const std::string& format) const {
    if (format == "json") {
      json arr = json::array();
      for (const auto& row : rows) {
        json obj;
        for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
        arr.push_back(std::move(obj));
      }
      os << arr.dump(2) << '\n';
      return;
    }
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << (i ? "," : "") << (row[i].is_string() ? row[i].get<std::string>() : row[i].dump());
      os << '\n';
    }
  }
};

json real(long double v) { return static_cast<double>(v); }

// ---------------------------------------------------------------- commands

CountTable counts_for(const PlanarLattice& lattice, const std::string& predicate_name, std::int64_t max_n,
                      const std::string& method, unsigned workers) {
  const bool pairs = method == "pairs" || (method == "auto" && predicate_name == "wr" && max_n > 20000);
  if (pairs) {
    if (predicate_name != "wr") throw std::invalid_argument("--method pairs only counts well-rounded sublattices");
    return count_wr_by_minimal_pairs(lattice, max_n);
  }
  if (method != "auto" && method != "hnf") throw std::invalid_argument("unknown method '" + method + "'");
  return count_table(lattice, max_n, resolve_predicate(predicate_name, lattice), workers);
}

int cmd_count(const RunConfig& c, std::ostream& out) {
  require_positive(c.max_n, "--max-n");
  const PlanarLattice lattice = resolve_lattice(c);
  const CountTable table = counts_for(lattice, c.predicate, c.max_n, c.method, c.workers);
  Table t{{"n", "count"}, {}};
  for (std::int64_t n = 1; n <= table.max_n(); ++n) t.rows.push_back({n, table[n]});
  t.write(out, c.format);
  return kExitOk;
}

AsymptoticModel resolve_model(const RunConfig& c, const CountTable& counts) {
  const std::string& m = c.model;
  if (m == "none") return {};
  const bool square = c.lattice == "square", triangle = c.lattice == "triangle";
  if (m == "thm3") {
    if (square) return AsymptoticModel::leading_square();
    if (triangle) return {AsymptoticModel::Kind::LeadingTerm, triangle_main_slope(), 0};
    throw std::invalid_argument("thm3 is defined for the square and triangle lattices");
  }
  if (m == "thm4") {
    if (square) return AsymptoticModel::two_term(square_main_slope(), compute_c_square(1e-6L).value);
    if (triangle)
      return AsymptoticModel::two_term(triangle_main_slope(),
                                       estimate_laurent_constant(counts, triangle_main_slope()).constant);
    const TwoTermFit fit = fit_two_term(counts);
    return AsymptoticModel::two_term(fit.slope, fit.constant);
  }
  if (m.starts_with("thm5:")) {
    const std::int64_t sigma = parse_int(m.substr(5), "sigma");
    require_positive(sigma, "sigma");
    return AsymptoticModel::two_reflections(sigma);
  }
  throw std::invalid_argument("unknown model '" + m + "'");
}

int cmd_summatory(const RunConfig& c, std::ostream& out, const std::string& predicate) {
  const std::int64_t x_max = c.x_max > 0 ? c.x_max : c.max_n;
  require_positive(x_max, "--x-max");
  require_positive(c.x_min, "--x-min");
  require_positive(c.points, "--points");
  if (c.x_min > x_max) throw std::invalid_argument("--x-min exceeds --x-max");
  const PlanarLattice lattice = resolve_lattice(c);
  const CountTable counts = counts_for(lattice, predicate, x_max, c.method, c.workers);
  const AsymptoticModel model = resolve_model(c, counts);
  const SummatoryReport r =
      residual_report(counts, model, log_grid(c.x_min, x_max, static_cast<std::size_t>(c.points)));
  Table t{{"x", "A", "model", "residual", "normalized_residual"}, {}};
  for (std::size_t i = 0; i < r.x.size(); ++i)
    t.rows.push_back({r.x[i], r.cumulative[i], real(r.model[i]), real(r.residual[i]), real(r.normalized_residual[i])});
  t.write(out, c.format);
  return kExitOk;
}

CoeffSeries resolve_series(const std::string& which, std::int64_t n) {
  if (which == "square-wr") return wr_series_square(n);
  if (which == "triangle-wr") return wr_series_triangle(n);
  if (which == "square-similar") return standard_series(StandardSeries::DedekindGauss, n);
  if (which == "triangle-similar") return standard_series(StandardSeries::DedekindEisenstein, n);
  if (which == "square-primitive") return primitive_similar(LatticeFamily::Square, n);
  if (which == "triangle-primitive") return primitive_similar(LatticeFamily::Triangle, n);
  if (which == "window:square-even") return window_series(Window::SqEven, n);
  if (which == "window:square-odd") return window_series(Window::SqOdd, n);
  if (which == "window:triangle-even") return window_series(Window::TriEven, n);
  if (which == "window:triangle-odd") return window_series(Window::TriOdd, n);
  throw std::invalid_argument("unknown series '" + which + "'");
}

int cmd_series(const RunConfig& c, std::ostream& out) {
  require_positive(c.max_n, "--max-n");
  const CoeffSeries s = resolve_series(c.which, c.max_n);
  Table t{{"n", "c"}, {}};
  for (std::int64_t n = 1; n <= s.length(); ++n) t.rows.push_back({n, big_to_json(s[n])});
  t.write(out, c.format);
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_positive(c.max_n, "--max-n");
  if (c.lattice != "square" && c.lattice != "triangle")
    throw std::invalid_argument("verify needs --lattice square or triangle");
  const bool square = c.lattice == "square";
  const PlanarLattice lattice = square ? PlanarLattice::square() : PlanarLattice::triangle();
  struct Check {
    std::string name;
    std::string predicate;
    CoeffSeries series;
  };
  const std::vector<Check> checks = {
      {square ? "square-wr" : "triangle-wr", "wr", square ? wr_series_square(c.max_n) : wr_series_triangle(c.max_n)},
      {square ? "square-similar" : "triangle-similar", square ? "square" : "hexagonal",
       standard_series(square ? StandardSeries::DedekindGauss : StandardSeries::DedekindEisenstein, c.max_n)},
  };
  for (const Check& check : checks) {
    const CountTable brute = count_table(lattice, c.max_n, resolve_predicate(check.predicate, lattice), c.workers);
    for (std::int64_t n = 1; n <= c.max_n; ++n) {
      if (check.series[n] == brute[n]) continue;
      std::ostringstream msg;
      msg << "MISMATCH " << check.name << " at n=" << n << ": series " << to_string(check.series[n])
          << ", brute force " << brute[n];
      out << msg.str() << '\n';
      err << msg.str() << '\n';
      return kExitMismatch;
    }
    out << "ok " << check.name << " n<=" << c.max_n << '\n';
  }
  return kExitOk;
}

Axis parse_axis(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw std::invalid_argument("--axis expects p,q");
  return {parse_int(parts[0], "axis"), parse_int(parts[1], "axis")};
}

int cmd_csl_index(const RunConfig& c, std::ostream& out) {
  const PlanarLattice lattice = resolve_lattice(c);
  const Axis axis = parse_axis(c.axis);
  json j;
  j["axis"] = axis;
  if (const auto s = reflection_matrix(lattice, axis)) {
    j["matrix"] = rational_matrix_json(*s);
    j["sigma"] = big_to_json(csl_index(*s));
  } else {
    j["rational"] = false;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_csl_scan(const RunConfig& c, std::ostream& out) {
  require_positive(c.bound, "--bound");
  const ReflectionScan scan = coincidence_reflections(resolve_lattice(c), c.bound);
  json list = json::array();
  for (const auto& r : scan.reflections) list.push_back(reflection_json(r));
  out << list.dump(2) << '\n';
  return kExitOk;
}

json bounded_json(const Bounded& b) { return json{{"value", real(b.value)}, {"error", real(b.error)}}; }

int cmd_constants(const RunConfig& c, std::ostream& out) {
  if (!(c.tol > 0)) throw std::invalid_argument("--tol must be positive");
  const std::string& w = c.which;
  json j;
  if (w == "c-square") {
    j = bounded_json(compute_c_square(c.tol));
  } else if (w == "gamma") {
    j = bounded_json(euler_gamma());
  } else if (w == "zeta-prime-2") {
    j = bounded_json(zeta_prime_2());
  } else if (w == "l-prime-chi4") {
    j = bounded_json(l_prime_1_chi4());
  } else if (w == "all") {
    const ConstantBundle b = constants();
    j["gamma"] = bounded_json(b.gamma);
    j["zeta2"] = bounded_json(b.zeta2);
    j["zeta_prime_2"] = bounded_json(b.zeta_prime_2);
    j["L1_chi4"] = bounded_json(b.L1_chi4);
    j["L1_chi3"] = bounded_json(b.L1_chi3);
    j["Lprime1_chi4"] = bounded_json(b.Lprime1_chi4);
    j["c_square"] = bounded_json(compute_c_square(c.tol));
  } else {
    throw std::invalid_argument("unknown constant '" + w + "'");
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_highdim(const RunConfig& c, std::ostream& out) {
  OrthoSpec spec;
  for (const std::string& part : split(c.lengths_sq, ',')) spec.lengths_sq.push_back(parse_rational(part));
  LatticeD lattice = c.construct == "fullsign" ? fullsign_lattice(spec)
                     : c.construct == "subset" ? subset_sign_lattice(spec)
                                               : throw std::invalid_argument("unknown construction '" + c.construct + "'");
  const ShortestVectors sv = shortest_vectors(lattice);
  json basis = json::array();
  for (Eigen::Index r = 0; r < lattice.basis().rows(); ++r) {
    json row = json::array();
    for (Eigen::Index k = 0; k < lattice.basis().cols(); ++k) row.push_back(lattice.basis()(r, k));
    basis.push_back(std::move(row));
  }
  json j;
  j["basis"] = std::move(basis);
  j["min_norm"] = to_string(sv.min_norm);
  j["min_vector_count"] = sv.vectors.size();
  j["well_rounded"] = rank_of(sv.vectors) == lattice.dimension();
  out << j.dump(2) << '\n';
  return kExitOk;
}

json harness_json(const PlanarLattice& lattice, const HarnessReport& h) {
  json j;
  j["gram"] = to_string(lattice.gram);
  j["verdict"] = to_string(h.verdict);
  j["all_rational"] = h.scan.all_rational;
  j["reflections"] = h.scan.reflections.size();
  if (h.wr_witness) {
    const auto& w = *h.wr_witness;
    j["wr_witness"] = json{{"index", w.index}, {"hnf", json::array({w.hnf.a, w.hnf.b, w.hnf.d})}, {"shape", to_string(w.shape)}};
  } else {
    j["wr_witness"] = nullptr;
  }
  j["witness_mirror"] = h.witness_mirror ? reflection_json(*h.witness_mirror) : json(nullptr);
  return j;
}

int cmd_harness(const RunConfig& c, std::ostream& out) {
  require_positive(c.bound, "--bound");
  require_positive(c.index_bound, "--index-bound");
  std::vector<PlanarLattice> lattices;
  if (c.lattice_given) {
    lattices.push_back(resolve_lattice(c));
  } else {
    require_positive(c.samples, "--samples");
    std::mt19937_64 rng(c.seed);
    for (std::int64_t i = 0; i < c.samples; ++i) lattices.push_back(random_rational_lattice(rng));
  }
  json list = json::array();
  bool violation = false;
  for (const auto& l : lattices) {
    const HarnessReport h = theorem1_harness(l, c.bound, c.index_bound);
    violation = violation || h.verdict == Verdict::Violation;
    list.push_back(harness_json(l, h));
  }
  out << list.dump(2) << '\n';
  return violation ? kExitMismatch : kExitOk;
}

// ---------------------------------------------------------------- command line

struct Parser {
  CLI::App app{"Well-rounded sublattices of planar lattices: counting, Dirichlet series, CSL indices, asymptotics."};
  RunConfig config;
  std::string workers_text;
  std::string seed_text;
  std::string tol_text;

  void add_common(CLI::App* sub) {
    sub->add_option("--out", config.out, "Output path, '-' for stdout")->capture_default_str();
    sub->add_option("--format", config.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  }
  void add_lattice(CLI::App* sub, const char* name = "--lattice") {
    sub->add_option(name, config.lattice,
                                "square, triangle, file (with --gram-file) or Gram text g11,g12,g22; entries "
                                "take the form a+b*sqrt(m) with rationals p/q");
    sub->add_option("--gram-file", config.gram_file, "File whose first line is the Gram text");
    sub->add_option("--radicand", config.radicand, "Radicand m for Gram entries containing sqrt(m)");
  }
  void add_workers(CLI::App* sub) {
    sub->add_option("--workers", workers_text, std::string("Worker threads (default from ") + kWorkersEnv + ")");
  }

  Parser() {
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    auto* count = app.add_subcommand("count", "Sublattice counts by index, CSV n,count");
    add_lattice(count);
    count->add_option("--predicate", config.predicate,
                      "wr, similar, square, hexagonal, rhombic-wr, rhombic-nonwr, rectangular, oblique");
    count->add_option("--max-n", config.max_n)->required();
    count->add_option("--method", config.method, "auto, hnf (brute force) or pairs (minimal vector pairs, wr only)");
    add_workers(count);
    add_common(count);

    auto* summ = app.add_subcommand("summatory", "A(x) on a log grid against a model, CSV x,A,model,residual,normalized_residual");
    add_lattice(summ);
    summ->add_option("--predicate", config.predicate);
    summ->add_option("--max-n", config.max_n, "Largest x")->required();
    summ->add_option("--x-min", config.x_min);
    summ->add_option("--points", config.points, "Approximate number of grid points");
    summ->add_option("--model", config.model, "none, thm3, thm4 or thm5:SIGMA");
    summ->add_option("--method", config.method);
    add_workers(summ);
    add_common(summ);

    auto* series = app.add_subcommand("series", "Dirichlet series coefficients, CSV n,c");
    series->add_option("--which", config.which,
                       "square-wr, triangle-wr, square-similar, triangle-similar, square-primitive, "
                       "triangle-primitive, window:{square,triangle}-{even,odd}")
        ->required();
    series->add_option("--max-n", config.max_n)->required();
    add_common(series);

    auto* verify = app.add_subcommand("verify", "Brute-force counts against the Dirichlet series; exit 1 on mismatch");
    verify->add_option("--lattice", config.lattice, "square or triangle");
    verify->add_option("--max-n", config.max_n)->required();
    add_workers(verify);
    verify->add_option("--out", config.out);

    auto* csl = app.add_subcommand("csl", std::string("Coincidence reflections. ") + kCslScope);
    csl->require_subcommand(1);
    auto* index = csl->add_subcommand("index", std::string("Reflection matrix and index for one axis. ") + kCslScope);
    add_lattice(index, "--gram");
    index->add_option("--axis", config.axis, "Primitive lattice vector p,q on the mirror")->required();
    index->add_option("--out", config.out);
    auto* scan = csl->add_subcommand("scan", std::string("All coincidence reflections with axis coordinates in [-B, B]. ") + kCslScope);
    add_lattice(scan, "--gram");
    scan->add_option("--bound", config.bound)->required();
    scan->add_option("--out", config.out);

    auto* cons = app.add_subcommand("constants", "Constants with error bounds, JSON {value, error}");
    cons->add_option("--which", config.which, "c-square, gamma, zeta-prime-2, l-prime-chi4, all")->required();
    cons->add_option("--tol", tol_text, "Absolute target for c-square (>= 1e-6)");
    cons->add_option("--out", config.out);

    auto* asympt = app.add_subcommand("asympt", "Well-rounded summatory function against a growth law");
    add_lattice(asympt);
    asympt->add_option("--x-max", config.x_max)->required();
    asympt->add_option("--x-min", config.x_min);
    asympt->add_option("--points", config.points);
    asympt->add_option("--model", config.model, "thm3, thm4 or thm5:SIGMA")->required();
    asympt->add_option("--method", config.method, "auto, hnf or pairs");
    add_workers(asympt);
    add_common(asympt);

    auto* high = app.add_subcommand("highdim", "Sign-vector lattices over an orthogonal basis, JSON");
    high->add_option("--construct", config.construct, "fullsign or subset")->required();
    high->add_option("--lengths-sq", config.lengths_sq, "l1,...,ld squared lengths (rationals)")->required();
    high->add_option("--out", config.out);

    auto* harness = app.add_subcommand(
        "harness", std::string("Reflection versus well-rounded sublattice cross-check. ") + kCslScope);
    add_lattice(harness);
    harness->add_option("--samples", config.samples, "Random rational lattices when no --lattice is given");
    harness->add_option("--seed", seed_text);
    harness->add_option("--bound", config.bound, "Axis bound");
    harness->add_option("--index-bound", config.index_bound);
    harness->add_option("--out", config.out);
  }
};

template <typename T>
T parse_number(const std::string& text, const char* what) {
  T v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument(std::string("bad ") + what + ": '" + text + "'");
  return v;
}

bool given(const CLI::App* app, const std::string& name) {
  const CLI::Option* opt = app->get_option_no_throw(name);
  return opt && opt->count() > 0;
}

}  // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::string* help) {
  Parser p;
  std::vector<const char*> argv{"wrlat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    p.app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    if (help) *help = p.app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    if (help) *help = p.app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }
  RunConfig c = p.config;
  for (const CLI::App* sub : p.app.get_subcommands()) {
    c.subcommand = sub->get_name();
    c.lattice_given = given(sub, "--lattice");
    for (const CLI::App* inner : sub->get_subcommands()) {
      c.subcommand += " " + inner->get_name();
      c.lattice_given = given(inner, "--gram");
    }
  }
  c.workers = p.workers_text.empty() ? default_workers() : parse_number<unsigned>(p.workers_text, "worker count");
  if (c.workers == 0) throw std::invalid_argument("worker count must be positive");
  if (!p.seed_text.empty()) c.seed = parse_number<std::uint64_t>(p.seed_text, "seed");
  if (!p.tol_text.empty()) c.tol = std::stold(p.tol_text);
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (config.out != "-") {
    file.open(config.out);
    if (!file) throw std::invalid_argument("cannot write " + config.out);
    sink = &file;
  }
  std::ostream& os = *sink;
  const std::string& s = config.subcommand;
  if (s == "count") return cmd_count(config, os);
  if (s == "summatory") return cmd_summatory(config, os, config.predicate);
  if (s == "asympt") return cmd_summatory(config, os, "wr");
  if (s == "series") return cmd_series(config, os);
  if (s == "verify") return cmd_verify(config, os, err);
  if (s == "csl index") return cmd_csl_index(config, os);
  if (s == "csl scan") return cmd_csl_scan(config, os);
  if (s == "constants") return cmd_constants(config, os);
  if (s == "highdim") return cmd_highdim(config, os);
  if (s == "harness") return cmd_harness(config, os);
  throw std::invalid_argument("unknown subcommand '" + s + "'");
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    std::string help;
    config = parse_args(args, &help);
    if (!config) {
      out << help;
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\nrun with --help for usage\n";
    return kExitUsage;
  }
  try {
    return run(*config, out, err);
  } catch (const RadicandMismatch& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace wrl::cli
