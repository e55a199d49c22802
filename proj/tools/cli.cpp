#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "hypf/biortho.hpp"
#include "hypf/cfrac.hpp"
#include "hypf/faber.hpp"
#include "hypf/genfun.hpp"
#include "hypf/hfs.hpp"
#include "hypf/kleingordon.hpp"
#include "hypf/modular.hpp"
#include "hypf/transfer.hpp"
#include "selftest.hpp"

namespace {

using namespace hypf;
using json = nlohmann::ordered_json;

constexpr int schema_version = 1;

// Rows share one set of keys. JSON also carries `meta`; a scalar result is
// printed as a single flat object.
struct Table {
  std::vector<json> rows;
  json meta = json::object();
  bool scalar = false;
  std::string text;  // preformatted report for --format text
  json body;         // replaces rows and meta in JSON output when set
};

struct Globals {
  std::string format = "json";
  std::string out;
  std::optional<double> tol;
  std::string command;

  EvalConfig eval() const {
    EvalConfig c;
    if (tol) c.abs_tol = *tol;
    return c;
  }
  QuadConfig quad() const {
    QuadConfig c;
    if (tol) c.abs_tol = *tol;
    return c;
  }
};

cplx parse_complex(const std::string& s) {
  static const std::regex re(
      R"(([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)([+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i)");
  std::smatch m;
  if (!std::regex_match(s, m, re))
    throw DomainError("malformed complex literal '" + s + "', expected RE+IMi or RE-IMi");
  return {std::stod(m[1].str()), std::stod(m[2].str())};
}

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw DomainError("malformed number '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// start:stop:step, a comma list, or one number.
std::vector<double> parse_points(const std::string& s) {
  std::vector<double> out;
  if (s.find(':') != std::string::npos) {
    const auto p = split(s, ':');
    if (p.size() != 3) throw DomainError("grid '" + s + "' must be start:stop:step");
    const double a = parse_real(p[0]), b = parse_real(p[1]), h = parse_real(p[2]);
    if (!(h > 0.0) || b < a) throw DomainError("grid '" + s + "' needs start <= stop and step > 0");
    const long count = std::lround(std::floor((b - a) / h + 1e-9)) + 1;
    if (count > 1000000) throw DomainError("grid '" + s + "' has too many points");
    for (long k = 0; k < count; ++k) out.push_back(a + k * h);
    return out;
  }
  for (const auto& item : split(s, ',')) out.push_back(parse_real(item));
  if (out.empty()) throw DomainError("empty point list");
  return out;
}

std::pair<double, double> parse_pair(const std::string& s) {
  const auto p = split(s, ':');
  if (p.size() != 2) throw DomainError("'" + s + "' must be A:B");
  return {parse_real(p[0]), parse_real(p[1])};
}

std::string rational_string(const mpq_class& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

void put(json& row, const std::string& key, cplx v) {
  row[key.empty() ? "re" : key + "_re"] = v.real();
  row[key.empty() ? "im" : key + "_im"] = v.imag();
}

json estimate_row(const Estimate& e) {
  json row;
  put(row, "", e.value);
  row["error"] = e.error;
  return row;
}

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  return v.dump();
}

void write_table(const Table& t, const Globals& g, std::ostream& os) {
  if (g.format == "text") {
    if (t.text.empty()) throw DomainError("--format text is only available for selftest");
    os << t.text;
    return;
  }
  if (g.format == "csv") {
    if (t.rows.empty()) return;
    bool first = true;
    for (const auto& [key, value] : t.rows.front().items()) {
      os << (first ? "" : ",") << key;
      first = false;
    }
    os << '\n';
    for (const auto& row : t.rows) {
      first = true;
      for (const auto& [key, value] : t.rows.front().items()) {
        os << (first ? "" : ",") << (row.contains(key) ? csv_cell(row[key]) : "");
        first = false;
      }
      os << '\n';
    }
    return;
  }
  json doc;
  doc["schema_version"] = schema_version;
  doc["command"] = g.command;
  if (!t.body.is_null()) {
    for (const auto& [key, value] : t.body.items()) doc[key] = value;
  } else if (t.scalar && t.rows.size() == 1) {
    for (const auto& [key, value] : t.rows.front().items()) doc[key] = value;
  } else {
    doc["rows"] = t.rows;
  }
  if (!t.meta.empty()) doc["meta"] = t.meta;
  os << doc.dump(2) << '\n';
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError(path + ": " + e.what());
  }
}

// t,re[,im] per line; a first line that does not parse is taken as a header.
std::pair<std::vector<double>, std::vector<cplx>> read_samples_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::vector<double> t;
  std::vector<cplx> v;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split(line, ',');
    try {
      if (cells.size() < 2 || cells.size() > 3) throw DomainError("expected t,re[,im]");
      t.push_back(parse_real(cells[0]));
      v.emplace_back(parse_real(cells[1]), cells.size() == 3 ? parse_real(cells[2]) : 0.0);
    } catch (const DomainError& e) {
      if (lineno == 1 && t.empty()) continue;
      throw DomainError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return {t, v};
}

TestFunction test_function(const std::string& bump, const std::string& gauss) {
  if (!bump.empty() && !gauss.empty()) throw DomainError("give one of --bump and --gauss");
  if (!bump.empty()) {
    const auto [a, b] = parse_pair(bump);
    return smooth_bump(a, b);
  }
  if (!gauss.empty()) {
    const auto [c, s] = parse_pair(gauss);
    return gaussian_bump(c, s);
  }
  throw DomainError("a test function is required (--bump A:B or --gauss C:SIGMA)");
}

Table coeff_table(const HFSCoeffs& c) {
  Table t;
  for (const auto& [n, v] : c.h) {
    json row;
    row["kind"] = "h";
    row["n"] = n;
    put(row, "", v);
    t.rows.push_back(row);
  }
  for (const auto& [n, v] : c.m) {
    json row;
    row["kind"] = "m";
    row["n"] = n;
    put(row, "", v);
    t.rows.push_back(row);
  }
  // JSON: {N, error, h: [{n, re, im}], m: [...]}.
  t.body["N"] = c.N;
  t.body["error"] = c.error;
  for (const char* side : {"h", "m"}) {
    json list = json::array();
    for (const auto& row : t.rows)
      if (row["kind"] == side) list.push_back({{"n", row["n"]}, {"re", row["re"]}, {"im", row["im"]}});
    t.body[side] = list;
  }
  return t;
}

// {N, ratio?, ux: [{n, re, im}], uy: [...]}.
KGSamples samples_from_json(const json& doc) {
  KGSamples s;
  try {
    s.N = doc.at("N").get<int>();
    if (doc.contains("ratio")) s.ratio = doc["ratio"].get<double>();
    for (auto [key, target] : {std::pair{"ux", &s.ux}, std::pair{"uy", &s.uy}})
      for (const auto& row : doc.at(key)) {
        const int n = row.at("n").get<int>();
        if (std::abs(n) > s.N || (n == 0 && target == &s.uy)) throw DomainError("sample index out of range");
        (*target)[n] = cplx(row.at("re").get<double>(), row.at("im").get<double>());
      }
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed samples file: ") + e.what());
  }
  return s;
}

// X0:X1:NX,Y0:Y1:NY with NX, NY point counts.
std::pair<std::vector<double>, std::vector<double>> parse_count_grid(const std::string& s) {
  const auto axes = split(s, ',');
  if (axes.size() != 2) throw DomainError("grid '" + s + "' must be X0:X1:NX,Y0:Y1:NY");
  std::vector<double> out[2];
  for (int k = 0; k < 2; ++k) {
    const auto p = split(axes[k], ':');
    if (p.size() != 3) throw DomainError("grid '" + s + "' must be X0:X1:NX,Y0:Y1:NY");
    const double a = parse_real(p[0]), b = parse_real(p[1]), n = parse_real(p[2]);
    if (n < 1 || n != std::floor(n) || n > 100000) throw DomainError("grid point counts must be positive integers");
    for (int i = 0; i < n; ++i) out[k].push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
  }
  return {out[0], out[1]};
}

BiorthoConfig biortho_config(const std::string& path, const std::string& precision,
                             const Globals& g) {
  BiorthoConfig cfg;
  cfg.path = path == "direct" ? PathPolicy::DIRECT : path == "low" ? PathPolicy::LOW_CONTOUR : PathPolicy::AUTO;
  cfg.precision = precision == "quad" ? Precision::QUAD : Precision::DOUBLE;
  cfg.quad = g.quad();
  if (g.tol) cfg.low_tol = *g.tol;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  std::function<Table()> action;

  CLI::App app{"Modular kernels, hyperbolic Fourier systems and Klein-Gordon interpolation", "hypf"};
  app.require_subcommand(1);
  // Subcommands inherit this, so global options may follow the subcommand.
  app.fallthrough();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "write output to this path instead of stdout; `csv` or `json` select the format");
  app.add_option("--tol", g.tol, "absolute tolerance for series and quadrature")
      ->check(CLI::PositiveNumber);

  // theta
  std::string th_z, th_q, th_kind = "all";
  auto* theta_cmd = app.add_subcommand("theta", "theta functions of z or of the nome q");
  auto* th_zopt = theta_cmd->add_option("--z", th_z, "point in the upper half-plane");
  auto* th_qopt = theta_cmd->add_option("--q", th_q, "nome in the unit disk");
  th_zopt->excludes(th_qopt);
  theta_cmd->add_option("--kind", th_kind)->check(CLI::IsMember({"2", "3", "4", "all"}))->capture_default_str();
  theta_cmd->callback([&] {
    action = [&] {
      if (th_z.empty() == th_q.empty()) throw DomainError("give exactly one of --z and --q");
      Table t;
      const std::vector<int> kinds = th_kind == "all" ? std::vector<int>{2, 3, 4} : std::vector<int>{std::stoi(th_kind)};
      for (int k : kinds) {
        json row;
        row["kind"] = k;
        put(row, "", th_z.empty() ? theta(k, parse_complex(th_q), g.eval()) : big_theta(k, parse_complex(th_z), g.eval()));
        t.rows.push_back(row);
      }
      return t;
    };
  });

  // lambda
  std::string la_z;
  auto* lambda_cmd = app.add_subcommand("lambda", "modular lambda, its complement and derivative");
  lambda_cmd->add_option("--z", la_z)->required();
  lambda_cmd->callback([&] {
    action = [&] {
      const LambdaValues v = lambda_values(parse_complex(la_z), g.eval());
      json row;
      put(row, "", v.lam);
      put(row, "comp", v.comp);
      put(row, "deriv", v.dlam);
      return Table{{row}, json::object(), true, {}, {}};
    };
  });

  // tau
  std::string ta_z;
  auto* tau_cmd = app.add_subcommand("tau", "inverse of lambda on the fundamental quadrilateral");
  tau_cmd->add_option("--z", ta_z)->required();
  tau_cmd->callback([&] {
    action = [&] {
      json row;
      put(row, "", schwarz_tau(parse_complex(ta_z)));
      return Table{{row}, json::object(), true, {}, {}};
    };
  });

  // spoly
  int sp_n = 1;
  auto* spoly_cmd = app.add_subcommand("spoly", "exact coefficients of the triangle polynomial S_n");
  spoly_cmd->add_option("--n", sp_n)->required()->check(CLI::Range(1, 256));
  spoly_cmd->callback([&] {
    action = [&] {
      const RationalPoly p = sp_n <= SchwarzFamily::shared().nmax()
                                 ? SchwarzFamily::shared().poly(sp_n)
                                 : schwarz_poly(sp_n, laurent_table(sp_n + 1));
      Table t;
      for (int k = p.n; k >= 1; --k) {
        json row;
        row["k"] = k;
        row["coeff"] = rational_string(p.coeffs[k]);
        t.rows.push_back(row);
      }
      t.meta["n"] = sp_n;
      t.meta["value_at_1"] = rational_string(p(mpq_class(1)));
      return t;
    };
  });

  // cfrac
  std::string cf_p, cf_q, cf_word;
  auto* cfrac_cmd = app.add_subcommand("cfrac", "even continued fraction of p/q, or convergents of a word");
  cfrac_cmd->add_option("--p", cf_p, "numerator");
  cfrac_cmd->add_option("--q", cf_q, "denominator");
  cfrac_cmd->add_option("--word", cf_word, "comma list n_N,...,n_1, outermost first");
  cfrac_cmd->callback([&] {
    action = [&] {
      CFWord w;
      if (!cf_word.empty()) {
        if (!cf_p.empty() || !cf_q.empty()) throw DomainError("--word excludes --p and --q");
        for (const auto& item : split(cf_word, ',')) {
          const double v = parse_real(item);
          if (v != std::floor(v) || v == 0.0) throw DomainError("word entries must be nonzero integers");
          w.entries.push_back(static_cast<long>(v));
        }
      } else {
        if (cf_p.empty() || cf_q.empty()) throw DomainError("give --p and --q, or --word");
        mpz_class p, q;
        if (p.set_str(cf_p, 10) != 0 || q.set_str(cf_q, 10) != 0) throw DomainError("p and q must be integers");
        w = even_rational_decompose(p, q);
      }
      const ConvergentPair cv = convergents(w);
      Table t;
      for (int k = 1; k <= w.length(); ++k) {
        json row;
        row["k"] = k;
        row["entry"] = w.entries[w.length() - k];
        row["p"] = cv.p_at(k).get_str();
        row["q"] = cv.q_at(k).get_str();
        t.rows.push_back(row);
      }
      t.meta["word"] = w.entries;
      t.meta["value"] = rational_string(phi_apply(w, mpq_class(0)));
      if (!w.empty()) t.meta["roof_diameter"] = rational_string(roof_diameter(w));
      return t;
    };
  });

  // classify
  std::string cl_z;
  bool cl_lenient = false;
  double cl_eps = 1e-9;
  auto* classify_cmd = app.add_subcommand("classify", "cell of the even rational partition containing z");
  classify_cmd->add_option("--z", cl_z)->required();
  classify_cmd->add_flag("--lenient", cl_lenient, "pick a side on partition arcs instead of failing");
  classify_cmd->add_option("--boundary-eps", cl_eps)->capture_default_str();
  classify_cmd->callback([&] {
    action = [&] {
      const PartitionCell c = classify_point(parse_complex(cl_z), {cl_eps, cl_lenient});
      json row;
      row["kind"] = kind_name(c.kind);
      row["word"] = c.word.to_string();
      row["shift"] = c.shift;
      row["height"] = c.height;
      put(row, "image", c.orbit.back());
      return Table{{row}, json::object(), true, {}, {}};
    };
  });

  // genfun
  std::string gf_x = "0", gf_z, gf_method = "strip";
  int gf_delta = 0;
  auto* genfun_cmd = app.add_subcommand("genfun", "generating function Phi^delta(x; z)");
  genfun_cmd->add_option("--z", gf_z)->required();
  genfun_cmd->add_option("--x", gf_x, "points: start:stop:step or a comma list")->capture_default_str();
  genfun_cmd->add_option("--delta", gf_delta)->check(CLI::Range(0, 1))->capture_default_str();
  genfun_cmd->add_option("--method", gf_method)->check(CLI::IsMember({"inf", "pi", "strip"}))->capture_default_str();
  genfun_cmd->callback([&] {
    action = [&] {
      const auto xs = parse_points(gf_x);
      const cplx z = parse_complex(gf_z);
      std::vector<Estimate> v;
      if (gf_method == "inf") {
        v = phi_inf_batch(gf_delta, xs, z, g.quad());
      } else if (gf_method == "strip") {
        v = phi_strip_batch(gf_delta, xs, z, g.quad());
      } else {
        for (double x : xs) v.push_back(phi_pi(gf_delta, x, z, g.quad()));
      }
      Table t;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        json row;
        row["x"] = xs[i];
        row.update(estimate_row(v[i]));
        t.rows.push_back(row);
      }
      return t;
    };
  });

  // biortho
  std::string bo_family = "H", bo_x = "0", bo_path = "auto", bo_precision = "double";
  int bo_n = 1;
  bool bo_periodize = false;
  auto* biortho_cmd = app.add_subcommand("biortho", "biorthogonal functions H0, H_n, M_n");
  biortho_cmd->add_option("--family,--which", bo_family)
      ->transform(CLI::IsMember({"H0", "H", "M"}, CLI::ignore_case))
      ->capture_default_str();
  biortho_cmd->add_option("--n", bo_n)->capture_default_str();
  biortho_cmd->add_option("--x,--grid", bo_x, "points: start:stop:step or a comma list")->capture_default_str();
  biortho_cmd->add_option("--path", bo_path)->check(CLI::IsMember({"auto", "direct", "low"}))->capture_default_str();
  biortho_cmd->add_option("--precision", bo_precision)->check(CLI::IsMember({"double", "quad"}))->capture_default_str();
  biortho_cmd->add_flag("--periodize", bo_periodize, "sum f(x + 2k) over all integers k");
  biortho_cmd->callback([&] {
    action = [&] {
      const BiorthoEvaluator ev(biortho_config(bo_path, bo_precision, g));
      const Family fam = parse_family(bo_family);
      const int n = fam == Family::H0 ? 0 : bo_n;
      const auto xs = parse_points(bo_x);
      const auto v = bo_periodize ? periodize_batch(fam, n, xs, g.tol.value_or(1e-5), ev)
                                  : ev.eval(fam, n, xs);
      Table t;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        json row;
        row["x"] = xs[i];
        row.update(estimate_row(v[i]));
        t.rows.push_back(row);
      }
      t.meta["family"] = bo_family;
      t.meta["n"] = n;
      return t;
    };
  });

  // hfs
  auto* hfs_cmd = app.add_subcommand("hfs", "hyperbolic Fourier series");
  hfs_cmd->require_subcommand(1);
  std::string hf_input, hf_bump, hf_gauss, hf_z, hf_x;
  int hf_nmax = 8;
  auto* hfs_analyze = hfs_cmd->add_subcommand("analyze", "coefficients h_n, m_n of sampled data");
  hfs_analyze->add_option("--input", hf_input, "CSV rows t,re[,im]; linear interpolation, zero outside")->required();
  hfs_analyze->add_option("--nmax", hf_nmax)->check(CLI::Range(0, 32))->capture_default_str();
  hfs_analyze->callback([&] {
    action = [&] {
      auto [ts, vs] = read_samples_csv(hf_input);
      return coeff_table(analyze(from_samples(std::move(ts), std::move(vs)), hf_nmax, g.tol.value_or(1e-8)));
    };
  });
  auto* hfs_conj = hfs_cmd->add_subcommand("conj", "conjugate coefficients h*_n, m*_n of a test function");
  hfs_conj->add_option("--bump", hf_bump, "smooth bump supported on A:B");
  hfs_conj->add_option("--gauss", hf_gauss, "Gaussian C:SIGMA");
  hfs_conj->add_option("--nmax", hf_nmax)->check(CLI::Range(0, 32))->capture_default_str();
  hfs_conj->add_option("--x", hf_x, "also synthesize the series at these points");
  hfs_conj->callback([&] {
    action = [&] {
      const HFSCoeffs c = conj_analyze(test_function(hf_bump, hf_gauss), hf_nmax, g.tol.value_or(1e-8));
      Table t = coeff_table(c);
      if (!hf_x.empty()) {
        const auto xs = parse_points(hf_x);
        const auto s = conj_synthesize_batch(c, xs);
        json synth = json::array();
        for (std::size_t i = 0; i < xs.size(); ++i) {
          json row;
          row["x"] = xs[i];
          row.update(estimate_row(s[i]));
          synth.push_back(row);
        }
        t.body["synthesis"] = synth;
      }
      return t;
    };
  });
  auto* hfs_poisson = hfs_cmd->add_subcommand("poisson", "conjugate coefficients of the Poisson kernel at z");
  hfs_poisson->add_option("--z", hf_z)->required();
  hfs_poisson->add_option("--nmax", hf_nmax)->check(CLI::Range(0, 32))->capture_default_str();
  hfs_poisson->callback([&] {
    action = [&] { return coeff_table(poisson_coefficients(parse_complex(hf_z), hf_nmax)); };
  });

  // kg
  auto* kg_cmd = app.add_subcommand("kg", "Klein-Gordon interpolation on the characteristics");
  kg_cmd->require_subcommand(1);
  std::string kg_x = "0", kg_y = "0", kg_grid, kg_samples, kg_bump, kg_gauss;
  int kg_n = 0, kg_nmax = 16;
  auto* kg_r = kg_cmd->add_subcommand("r", "interpolating functions R_n(x, y)");
  kg_r->add_option("--n", kg_n)->check(CLI::Range(0, 32))->capture_default_str();
  kg_r->add_option("--x", kg_x)->capture_default_str();
  kg_r->add_option("--y", kg_y)->capture_default_str();
  kg_r->callback([&] {
    action = [&] {
      Table t;
      for (double x : parse_points(kg_x))
        for (double y : parse_points(kg_y)) {
          json row;
          row["x"] = x;
          row["y"] = y;
          row.update(estimate_row(r_interp(kg_n, x, y)));
          t.rows.push_back(row);
        }
      t.meta["n"] = kg_n;
      return t;
    };
  });
  auto* kg_sample = kg_cmd->add_subcommand("samples", "lattice samples U(pi n, 0), U(0, pi n) of a test function");
  kg_sample->add_option("--bump", kg_bump, "smooth bump supported on A:B");
  kg_sample->add_option("--gauss", kg_gauss, "Gaussian C:SIGMA");
  kg_sample->add_option("--nmax", kg_nmax)->check(CLI::Range(0, 32))->capture_default_str();
  kg_sample->callback([&] {
    action = [&] {
      const KGSamples s = samples_from(test_function(kg_bump, kg_gauss), kg_nmax);
      Table t;
      for (const auto& [axis, m] : {std::pair{"x", &s.ux}, std::pair{"y", &s.uy}})
        for (const auto& [n, v] : *m) {
          json row;
          row["axis"] = axis;
          row["n"] = n;
          put(row, "", v);
          t.rows.push_back(row);
        }
      t.body["N"] = s.N;
      for (const char* axis : {"x", "y"}) {
        json list = json::array();
        for (const auto& row : t.rows)
          if (row["axis"] == axis) list.push_back({{"n", row["n"]}, {"re", row["re"]}, {"im", row["im"]}});
        t.body[std::string("u") + axis] = list;
      }
      return t;
    };
  });
  auto* kg_rec = kg_cmd->add_subcommand("reconstruct", "solution from lattice samples on x >= 0, y <= 0");
  kg_rec->add_option("--samples", kg_samples, "JSON written by `kg samples`")->required();
  kg_rec->add_option("--x", kg_x, "x points (start:stop:step or a list)")->capture_default_str();
  kg_rec->add_option("--y", kg_y, "y points (start:stop:step or a list)")->capture_default_str();
  kg_rec->add_option("--grid", kg_grid, "X0:X1:NX,Y0:Y1:NY with point counts; overrides --x and --y");
  kg_rec->callback([&] {
    action = [&] {
      const KGSamples s = samples_from_json(read_json_file(kg_samples));
      const double tol = g.tol.value_or(std::numeric_limits<double>::infinity());
      const auto [xs, ys] = kg_grid.empty() ? std::pair{parse_points(kg_x), parse_points(kg_y)} : parse_count_grid(kg_grid);
      Table t;
      for (double x : xs)
        for (double y : ys) {
          json row;
          row["x"] = x;
          row["y"] = y;
          row.update(estimate_row(kg_reconstruct(s, x, y, tol)));
          t.rows.push_back(row);
        }
      return t;
    };
  });

  // transfer
  int tr_iter = 1, tr_count = 257, tr_k = 1000;
  auto* transfer_cmd = app.add_subcommand("transfer", "iterates of the even Gauss map transfer operator");
  transfer_cmd->add_option("--iterate", tr_iter, "N in T1^N[1]")->check(CLI::Range(0, 64))->capture_default_str();
  transfer_cmd->add_option("--count", tr_count, "Lobatto grid size")->check(CLI::Range(5, 4097))->capture_default_str();
  transfer_cmd->add_option("--K", tr_k, "explicit terms per side")->check(CLI::Range(1, 1000000))->capture_default_str();
  transfer_cmd->callback([&] {
    action = [&] {
      const GridFunction f = transfer_iterate(tr_iter, tr_k, tr_count);
      Table t;
      for (std::size_t i = 0; i < f.size(); ++i) {
        json row;
        row["x"] = f.nodes[i];
        put(row, "", f.values[i]);
        t.rows.push_back(row);
      }
      t.meta["N"] = tr_iter;
      t.meta["integral"] = grid_integral(f).real();
      t.meta["at_zero"] = f.value_at_zero.real();
      t.meta["interp_error"] = f.interp_error;
      if (tr_iter >= 2) t.meta["contraction"] = contraction_check(tr_iter, tr_k);
      return t;
    };
  });

  // selftest
  std::string st_suite = "quick";
  int st_only = 0;
  auto* selftest_cmd = app.add_subcommand("selftest", "run the quick checks or the acceptance suite");
  selftest_cmd->add_option("--suite", st_suite)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  selftest_cmd->add_option("--criterion", st_only, "run a single acceptance criterion")->check(CLI::Range(1, 9));
  bool st_failed = false;
  selftest_cmd->callback([&] {
    action = [&] {
      const auto checks = st_suite == "quick" ? selftest::run_quick() : selftest::run_acceptance(st_only, &std::cerr);
      Table t;
      for (const auto& c : checks) {
        json row;
        row["id"] = c.id;
        row["name"] = c.name;
        row["status"] = c.pass ? "PASS" : "FAIL";
        row["seconds"] = c.seconds;
        std::string details;
        for (const auto& d : c.details) details += (details.empty() ? "" : " | ") + d;
        row["details"] = details;
        t.rows.push_back(row);
        st_failed = st_failed || !c.pass;
      }
      std::ostringstream os;
      selftest::print_report(checks, os, true);
      t.text = os.str();
      return t;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (g.out == "csv" || g.out == "json") {
    g.format = g.out;
    g.out.clear();
  }
  for (const auto* sub = app.get_subcommands().front();;) {
    g.command += (g.command.empty() ? "" : " ") + sub->get_name();
    if (sub->get_subcommands().empty()) break;
    sub = sub->get_subcommands().front();
  }

  try {
    const Table t = action();
    if (g.out.empty()) {
      write_table(t, g, std::cout);
    } else {
      std::ofstream os(g.out);
      if (!os) throw DomainError("cannot write " + g.out);
      write_table(t, g, os);
    }
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  }
  return st_failed ? 2 : 0;
}
