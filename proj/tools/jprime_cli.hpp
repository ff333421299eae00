#pragma once

// Command-line front end. run() is separate from main() so the tests can
// drive it in-process.

#include <algorithm>
#include <cmath>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "jprime/jprime.hpp"

namespace jprime::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kParseError = 1, kDomainError = 2, kCheckFailed = 3 };

struct Options {
  std::string nu;
  unsigned max_order = 8;
  unsigned n = 6;
  unsigned k = 0;
  unsigned count = 0;
  std::string format = "json";
  std::string scan_format = "csv";
  std::string tol = "1e-30";
  unsigned window = 10;
  long prec_bits = 256;
  bool check = false;
  std::string method = "recurrence";
  std::string from, to, step;
  unsigned jobs = 0;
};

namespace detail {

struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational rational_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw ParseFailure(std::string(flag) + " is required");
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw ParseFailure(std::string(flag) + ": " + e.what());
  }
}

inline BigFloat tol_arg(const std::string& text, mpfr_prec_t bits) {
  try {
    BigFloat t(text, bits);
    if (t.sign() <= 0) throw ParseFailure("--tol must be positive");
    return t;
  } catch (const Error& e) {
    throw ParseFailure(std::string("--tol: ") + e.what());
  }
}

/// Significant digits worth printing for a result accurate to `tol`.
inline int digits_for(const BigFloat& tol) {
  double d = -std::log10(std::max(tol.to_double(), 1e-300));
  return std::clamp(static_cast<int>(std::ceil(d)) + 2, 6, 300);
}

inline std::string decimal(const Rational& q, int digits = 17) { return BigFloat(q, 256).to_general(digits); }

inline Json coeff_array(const RationalPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  if (p.is_zero()) a.push_back("0");
  return a;
}

inline std::string csv_coeffs(const RationalPoly& p) {
  std::string s;
  const auto& c = p.coeffs();
  if (c.empty()) return "0";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + to_string(c[i]);
  return s;
}

inline Json envelope(const std::string& command, const Json& nu, Json result) {
  Json j;
  j["command"] = command;
  j["nu"] = nu;
  j["result"] = std::move(result);
  j["version"] = kVersion;
  return j;
}

inline void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline int cmd_moments(const Options& o, std::ostream& out) {
  const Rational nu = rational_arg(o.nu, "--nu");
  const MomentTable table(nu, o.max_order);
  if (o.format == "json") {
    Json m = Json::array();
    for (const auto& v : table.moments()) m.push_back(to_string(v));
    emit_json(out, envelope("moments", to_string(nu), Json{{"max_order", o.max_order}, {"moments", m}}));
  } else if (o.format == "csv") {
    out << "n,mu\n";
    for (unsigned i = 0; i <= table.max_order(); ++i) out << i << "," << to_string(table[i]) << "\n";
  } else {
    for (unsigned i = 0; i <= table.max_order(); ++i) out << "mu_" << i << "=" << to_string(table[i]) << "\n";
  }
  return kOk;
}

inline int cmd_qpoly(const Options& o, std::ostream& out) {
  const Rational nu = rational_arg(o.nu, "--nu");
  const QFamily f = build_q(nu, o.n);
  if (o.format == "json") {
    Json q = Json::array(), qs = Json::array();
    for (unsigned i = 0; i <= o.n; ++i) {
      q.push_back(coeff_array(f.q[i]));
      qs.push_back(coeff_array(f.q_star[i]));
    }
    emit_json(out, envelope("qpoly", to_string(nu), Json{{"n_max", o.n}, {"q", q}, {"q_star", qs}}));
  } else if (o.format == "csv") {
    out << "n,q,q_star\n";
    for (unsigned i = 0; i <= o.n; ++i) out << i << "," << csv_coeffs(f.q[i]) << "," << csv_coeffs(f.q_star[i]) << "\n";
  } else {
    for (unsigned i = 0; i <= o.n; ++i)
      out << "q_" << i << " = " << f.q[i] << "\n" << "q*_" << i << " = " << f.q_star[i] << "\n";
  }
  return kOk;
}

inline int cmd_ppoly(const Options& o, std::ostream& out) {
  const Rational nu = rational_arg(o.nu, "--nu");
  if (o.method != "recurrence" && o.method != "quotient") throw ParseFailure("--method must be recurrence or quotient");
  const PFamily f = o.method == "quotient" ? build_p_quotient(nu, o.n) : build_p_recurrence(nu, o.n);
  if (o.format == "json") {
    Json p = Json::array(), g = Json::array();
    for (const auto& poly : f.p) p.push_back(coeff_array(poly));
    for (const auto& v : f.gamma) g.push_back(to_string(v));
    emit_json(out, envelope("ppoly", to_string(nu), Json{{"n_max", o.n}, {"method", o.method}, {"p", p}, {"gamma", g}}));
  } else if (o.format == "csv") {
    out << "n,p,gamma\n";
    for (unsigned i = 0; i <= o.n; ++i)
      out << i << "," << csv_coeffs(f.p[i]) << "," << (i >= 1 ? to_string(f.gamma_at(i)) : "") << "\n";
  } else {
    for (unsigned i = 0; i <= o.n; ++i) {
      out << "p_" << i << " = " << f.p[i] << "\n";
      if (i >= 1) out << "gamma_" << i << " = " << to_string(f.gamma_at(i)) << "\n";
    }
  }
  return kOk;
}

inline int cmd_hankel(const Options& o, std::ostream& out, std::ostream& err) {
  const Rational nu = rational_arg(o.nu, "--nu");
  const HankelReport r = lambda_sequence(nu, o.n, o.check);
  bool ok = true;
  for (const auto& row : r.rows)
    if (row.delta_direct && *row.delta_direct != row.delta_closed) ok = false;
  if (o.format == "json") {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
      Json j;
      j["n"] = row.n;
      j["delta_closed"] = to_string(row.delta_closed);
      j["delta_direct"] = row.delta_direct ? Json(to_string(*row.delta_direct)) : Json(nullptr);
      j["lambda"] = to_string(row.lambda);
      j["lambda_sign"] = row.lambda_sign;
      rows.push_back(std::move(j));
    }
    Json res{{"n_max", o.n}, {"rows", rows}};
    if (o.check) res["check"] = ok;
    emit_json(out, envelope("hankel", to_string(nu), std::move(res)));
  } else if (o.format == "csv") {
    out << "n,delta_closed,delta_direct,lambda,lambda_sign\n";
    for (const auto& row : r.rows)
      out << row.n << "," << to_string(row.delta_closed) << "," << (row.delta_direct ? to_string(*row.delta_direct) : "")
          << "," << to_string(row.lambda) << "," << row.lambda_sign << "\n";
  } else {
    for (const auto& row : r.rows) {
      out << "n=" << row.n << " delta=" << to_string(row.delta_closed);
      if (row.delta_direct) out << " direct=" << to_string(*row.delta_direct);
      out << " lambda_sign=" << row.lambda_sign << "\n";
    }
  }
  if (!ok) {
    err << "error: closed-form and direct Hankel determinants differ\n";
    return kCheckFailed;
  }
  return kOk;
}

inline Json optional_json(const std::optional<unsigned>& v) { return v ? Json(*v) : Json(nullptr); }

inline int cmd_classify(const Options& o, std::ostream& out) {
  if (o.nu.empty()) throw ParseFailure("--nu is required");
  ClassifyOptions opt;
  opt.window = o.window;
  ZeroClassification c;
  Json nu_json;
  if (is_fraction_literal(o.nu) || o.nu.find_first_of(".eE") == std::string::npos) {
    Rational nu = rational_arg(o.nu, "--nu");
    c = classify(nu, opt);
    nu_json = to_string(nu);
  } else {
    BigFloat nu = [&] {
      try {
        return BigFloat(o.nu, o.prec_bits);
      } catch (const Error& e) {
        throw ParseFailure(std::string("--nu: ") + e.what());
      }
    }();
    c = classify(nu, opt);
    nu_json = o.nu;
  }
  const char* pair = c.imaginary_pair ? "true" : "false";
  if (o.format == "json") {
    Json r;
    r["complex_count"] = c.complex_count;
    r["imaginary_pair"] = c.imaginary_pair;
    r["case"] = case_name(c.case_label);
    r["k"] = optional_json(c.k);
    r["counted_negatives"] = optional_json(c.counted_negatives);
    r["side_undecidable"] = c.side_undecidable;
    emit_json(out, envelope("classify", nu_json, std::move(r)));
  } else if (o.format == "csv") {
    out << "nu,complex_count,imaginary_pair,case,k,counted_negatives\n";
    out << o.nu << "," << c.complex_count << "," << pair << "," << case_name(c.case_label) << ","
        << (c.k ? std::to_string(*c.k) : "") << ","
        << (c.counted_negatives ? std::to_string(*c.counted_negatives) : "") << "\n";
  } else {
    out << "complex_count=" << c.complex_count << " imaginary_pair=" << pair << " case=" << case_name(c.case_label)
        << "\n";
  }
  return kOk;
}

inline int cmd_nuk(const Options& o, std::ostream& out) {
  if (o.k == 0 && o.count == 0) throw ParseFailure("nuk needs --k or --count");
  const BigFloat tol = tol_arg(o.tol, std::max<long>(o.prec_bits, 64));
  const int digits = digits_for(tol);
  std::vector<NuKEntry> entries;
  if (o.k > 0) {
    entries.push_back(find_nu_k(o.k, tol));
  } else {
    for (unsigned k = 1; k <= o.count; ++k) entries.push_back(find_nu_k(k, tol));
  }
  if (o.format == "json") {
    Json rows = Json::array();
    for (const auto& e : entries) {
      rows.push_back(Json{{"k", e.k},
                          {"bracket", Json::array({to_string(e.bracket.lo), to_string(e.bracket.hi)})},
                          {"value", e.value.to_general(digits)},
                          {"residual", e.residual.to_string(3)}});
    }
    emit_json(out, envelope("nuk", nullptr, Json{{"tol", o.tol}, {"entries", rows}}));
  } else if (o.format == "csv") {
    out << "k,lo,hi,value,residual\n";
    for (const auto& e : entries)
      out << e.k << "," << to_string(e.bracket.lo) << "," << to_string(e.bracket.hi) << "," << e.value.to_general(digits)
          << "," << e.residual.to_string(3) << "\n";
  } else {
    for (const auto& e : entries) out << "nu_" << e.k << "=" << e.value.to_general(digits) << "\n";
  }
  return kOk;
}

inline int cmd_zeros(const Options& o, std::ostream& out) {
  const unsigned count = o.count ? o.count : 5;
  const Rational nu_q = rational_arg(o.nu, "--nu");
  const BigFloat tol = tol_arg(o.tol, std::max<long>(o.prec_bits, 64));
  const auto zeros = find_real_zeros(BigFloat(nu_q, o.prec_bits), count, tol);
  const int digits = digits_for(tol);
  if (o.format == "json") {
    Json z = Json::array();
    for (const auto& v : zeros) z.push_back(v.to_general(digits));
    emit_json(out, envelope("zeros", to_string(nu_q), Json{{"tol", o.tol}, {"zeros", z}}));
  } else if (o.format == "csv") {
    out << "k,zero\n";
    for (std::size_t i = 0; i < zeros.size(); ++i) out << i + 1 << "," << zeros[i].to_general(digits) << "\n";
  } else {
    for (std::size_t i = 0; i < zeros.size(); ++i) out << "j'_" << i + 1 << "=" << zeros[i].to_general(digits) << "\n";
  }
  return kOk;
}

struct ScanRow {
  Rational nu;
  ZeroClassification c;
  std::vector<BigFloat> zeros;
};

inline ScanRow scan_one(const Rational& nu, unsigned window, const BigFloat& tol) {
  ClassifyOptions opt;
  opt.window = window;
  ScanRow row{nu, classify(nu, opt), {}};
  if (sgn(nu) > 0) row.zeros = find_real_zeros(BigFloat(nu, 128), 3, tol);
  return row;
}

inline int cmd_scan(const Options& o, std::ostream& out) {
  const Rational from = rational_arg(o.from, "--from");
  const Rational to = rational_arg(o.to, "--to");
  const Rational step = rational_arg(o.step, "--step");
  if (sgn(step) <= 0) throw ParseFailure("--step must be positive");
  if (to < from) throw ParseFailure("--to must not be below --from");
  std::vector<Rational> grid;
  for (Rational v = from; v <= to; v += step) grid.push_back(v);
  const BigFloat tol("1e-15", 128);

  unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  std::vector<ScanRow> rows(grid.size());
  std::vector<std::future<void>> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < grid.size(); i += jobs) rows[i] = scan_one(grid[i], o.window, tol);
    }));
  }
  for (auto& f : workers) f.get();

  auto zero_str = [](const ScanRow& r, std::size_t i) { return i < r.zeros.size() ? r.zeros[i].to_general(15) : ""; };
  if (o.scan_format == "json") {
    Json a = Json::array();
    for (const auto& r : rows) {
      Json z = Json::array();
      for (const auto& v : r.zeros) z.push_back(v.to_general(15));
      a.push_back(Json{{"nu", decimal(r.nu)},
                       {"complex_count", r.c.complex_count},
                       {"imaginary_pair", r.c.imaginary_pair},
                       {"counted_negatives", optional_json(r.c.counted_negatives)},
                       {"first_real_zeros", z}});
    }
    emit_json(out, envelope("scan", nullptr, Json{{"from", to_string(from)}, {"to", to_string(to)},
                                                   {"step", to_string(step)}, {"rows", a}}));
  } else {
    out << "nu,complex_count,imaginary_pair,counted_negatives,jp1,jp2,jp3\n";
    for (const auto& r : rows) {
      out << decimal(r.nu) << "," << r.c.complex_count << "," << (r.c.imaginary_pair ? "true" : "false") << ","
          << (r.c.counted_negatives ? std::to_string(*r.c.counted_negatives) : "") << "," << zero_str(r, 0) << ","
          << zero_str(r, 1) << "," << zero_str(r, 2) << "\n";
    }
  }
  return kOk;
}

}  // namespace detail

/// Runs one command; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rayleigh sums, orthogonal polynomials and complex-zero counts for J'_nu"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1, 1);
  Options o;

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_nu = [&](CLI::App* s) { s->add_option("--nu", o.nu, "order, as p/q or a decimal")->required(); };

  auto* moments = app.add_subcommand("moments", "mu_n = sigma'_nu(n+2), n = 0..max-order");
  add_nu(moments);
  moments->add_option("--max-order", o.max_order);
  add_format(moments);

  auto* qpoly = app.add_subcommand("qpoly", "q_n and q*_n, n = 0..N");
  add_nu(qpoly);
  qpoly->add_option("--n", o.n);
  add_format(qpoly);

  auto* ppoly = app.add_subcommand("ppoly", "monic p_n and gamma_n, n = 0..N");
  add_nu(ppoly);
  ppoly->add_option("--n", o.n);
  ppoly->add_option("--method", o.method, "recurrence or quotient");
  add_format(ppoly);

  auto* hankel = app.add_subcommand("hankel", "Delta_n and Lambda_n, n = 0..N");
  add_nu(hankel);
  hankel->add_option("--n", o.n);
  hankel->add_flag("--check", o.check, "also compute the determinants directly and compare");
  add_format(hankel);

  auto* classify_cmd = app.add_subcommand("classify", "count the complex zeros of J'_nu");
  add_nu(classify_cmd);
  classify_cmd->add_option("--window", o.window)->check(CLI::PositiveNumber);
  classify_cmd->add_option("--prec-bits", o.prec_bits)->check(CLI::Range(64, 1 << 20));
  add_format(classify_cmd);

  auto* nuk = app.add_subcommand("nuk", "double-zero orders nu_k");
  nuk->add_option("--k", o.k);
  nuk->add_option("--count", o.count, "tabulate k = 1..count");
  nuk->add_option("--tol", o.tol);
  nuk->add_option("--prec-bits", o.prec_bits)->check(CLI::Range(64, 1 << 20));
  add_format(nuk);

  auto* zeros = app.add_subcommand("zeros", "first positive zeros of J'_nu, nu > 0");
  add_nu(zeros);
  zeros->add_option("--count", o.count);
  zeros->add_option("--tol", o.tol);
  zeros->add_option("--prec-bits", o.prec_bits)->check(CLI::Range(64, 1 << 20));
  add_format(zeros);

  auto* scan = app.add_subcommand("scan", "classification sweep over nu");
  scan->add_option("--from", o.from)->required();
  scan->add_option("--to", o.to)->required();
  scan->add_option("--step", o.step)->required();
  scan->add_option("--window", o.window)->check(CLI::PositiveNumber);
  scan->add_option("--jobs", o.jobs);
  scan->add_option("--format", o.scan_format, "csv or json")->check(CLI::IsMember({"json", "csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (moments->parsed()) return detail::cmd_moments(o, out);
    if (qpoly->parsed()) return detail::cmd_qpoly(o, out);
    if (ppoly->parsed()) return detail::cmd_ppoly(o, out);
    if (hankel->parsed()) return detail::cmd_hankel(o, out, err);
    if (classify_cmd->parsed()) return detail::cmd_classify(o, out);
    if (nuk->parsed()) return detail::cmd_nuk(o, out);
    if (zeros->parsed()) return detail::cmd_zeros(o, out);
    if (scan->parsed()) return detail::cmd_scan(o, out);
  } catch (const detail::ParseFailure& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kParseError;
}

}  // namespace jprime::cli
