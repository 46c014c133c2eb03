#include "ptrec/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

#include "ptrec/errors.hpp"

namespace ptrec::cli {

using nlohmann::json;

namespace {

std::string opt_number(const std::optional<double>& v) { return v ? csv_number(*v) : std::string(); }

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

double z_score(double closed, double oracle, double se) {
  return se > 0.0 ? (closed - oracle) / se : (closed == oracle ? 0.0 : INFINITY);
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw InputError("unknown format '" + std::string(text) + "' (expected csv|json)");
}

Layout parse_layout(std::string_view text) {
  if (text == "long") return Layout::Long;
  if (text == "matrix") return Layout::Matrix;
  throw InputError("unknown layout '" + std::string(text) + "' (expected long|matrix)");
}

std::string csv_number(double value) {
  std::ostringstream s;
  s.precision(6);
  s << value;
  return s.str();
}

void write_estimate(std::ostream& out, const EstimateReport& r, Format format) {
  if (format == Format::Json) {
    json j{{"variant", std::string(to_string(r.variant))},
           {"n1", r.records1.size()},
           {"n2", r.records2.size()},
           {"records1", r.records1},
           {"records2", r.records2},
           {"theta1_hat", r.theta1_hat},
           {"theta2_hat", r.theta2_hat},
           {"pooled", r.pooled},
           {"alpha", r.alpha},
           {"c1", r.decision.c1},
           {"c2", r.decision.c2},
           {"ratio", r.decision.ratio},
           {"accepted", r.decision.accepted},
           {"theta_pt", r.theta_pt},
           {"theta_pt_star", r.theta_pt_star},
           {"k", opt_json(r.k)},
           {"theta_s", opt_json(r.theta_s)}};
    out << j.dump(2) << '\n';
    return;
  }
  out << "quantity,value\n"
      << "variant," << to_string(r.variant) << '\n'
      << "n1," << r.records1.size() << '\n'
      << "n2," << r.records2.size() << '\n'
      << "theta1_hat," << csv_number(r.theta1_hat) << '\n'
      << "theta2_hat," << csv_number(r.theta2_hat) << '\n'
      << "pooled," << csv_number(r.pooled) << '\n'
      << "alpha," << csv_number(r.alpha) << '\n'
      << "c1," << csv_number(r.decision.c1) << '\n'
      << "c2," << csv_number(r.decision.c2) << '\n'
      << "ratio," << csv_number(r.decision.ratio) << '\n'
      << "accepted," << (r.decision.accepted ? "true" : "false") << '\n'
      << "theta_pt," << csv_number(r.theta_pt) << '\n'
      << "theta_pt_star," << csv_number(r.theta_pt_star) << '\n';
  if (r.k) out << "k," << csv_number(*r.k) << '\n' << "theta_s," << csv_number(*r.theta_s) << '\n';
}

void write_risk_curve(std::ostream& out, const std::vector<CurvePoint>& points, Format format) {
  if (format == Format::Json) {
    json arr = json::array();
    for (const auto& p : points) {
      arr.push_back({{"delta", p.delta}, {"risk", p.risk}, {"family", p.family},
                     {"alpha", opt_json(p.alpha)}, {"k", opt_json(p.k)}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  out << "delta,risk,family,alpha,k\n";
  for (const auto& p : points) {
    out << csv_number(p.delta) << ',' << csv_number(p.risk) << ',' << p.family << ','
        << opt_number(p.alpha) << ',' << opt_number(p.k) << '\n';
  }
}

void write_table(std::ostream& out, const std::vector<TableCell>& cells, TableCase which,
                 Layout layout, Format format) {
  const bool has_alpha = which != TableCase::KFixedAlpha;
  const bool has_k = which != TableCase::Alpha;
  if (format == Format::Json) {
    json arr = json::array();
    for (const auto& c : cells) {
      json j{{"n1", c.n1}, {"n2", c.n2}};
      if (which == TableCase::KFixedAlpha) j["alpha"] = opt_json(c.alpha);
      if (has_alpha) j["alpha_star"] = opt_json(c.alpha);
      if (has_k) j["k_star"] = opt_json(c.k);
      j["regret_level"] = c.regret_level;
      j["delta_L"] = c.delta_L;
      j["delta_U"] = c.delta_U;
      j["fallback"] = c.fallback;
      if (!c.error.empty()) j["error"] = c.error;
      arr.push_back(j);
    }
    out << arr.dump(2) << '\n';
    return;
  }
  if (layout == Layout::Long) {
    out << "n1,n2";
    if (has_alpha) out << ",alpha_star";
    if (has_k) out << ",k_star";
    out << ",regret_level,delta_L,delta_U\n";
    for (const auto& c : cells) {
      out << c.n1 << ',' << c.n2;
      if (has_alpha) out << ',' << (c.error.empty() ? opt_number(c.alpha) : "");
      if (has_k) out << ',' << (c.error.empty() ? opt_number(c.k) : "");
      if (c.error.empty()) {
        out << ',' << csv_number(c.regret_level) << ',' << csv_number(c.delta_L) << ','
            << csv_number(c.delta_U) << '\n';
      } else {
        out << ",,,\n";
      }
    }
    return;
  }
  // Matrix: one row per n2, one column (pair for case 3) per n1.
  std::vector<int> n1s;
  std::vector<int> n2s;
  std::map<std::pair<int, int>, const TableCell*> at;
  for (const auto& c : cells) {
    if (std::find(n1s.begin(), n1s.end(), c.n1) == n1s.end()) n1s.push_back(c.n1);
    if (std::find(n2s.begin(), n2s.end(), c.n2) == n2s.end()) n2s.push_back(c.n2);
    at[{c.n1, c.n2}] = &c;
  }
  out << "n2";
  for (int n1 : n1s) {
    if (has_alpha) out << ",alpha_star_n1_" << n1;
    if (has_k) out << ",k_star_n1_" << n1;
  }
  out << '\n';
  auto rounded = [](const std::optional<double>& v) {
    if (!v) return std::string();
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(2);
    s << *v;
    return s.str();
  };
  for (int n2 : n2s) {
    out << n2;
    for (int n1 : n1s) {
      const TableCell* c = at[{n1, n2}];
      const bool ok = c && c->error.empty();
      if (has_alpha) out << ',' << (ok ? rounded(c->alpha) : "");
      if (has_k) out << ',' << (ok ? rounded(c->k) : "");
    }
    out << '\n';
  }
}

void write_solution(std::ostream& out, const DesignPair& design, std::string_view tuned_name,
                    std::optional<double> alpha, const RegretSolution& s, Format format) {
  if (format == Format::Json) {
    json j{{"n1", design.n1()},
           {"n2", design.n2()},
           {"variant", std::string(to_string(design.variant()))},
           {std::string(tuned_name), s.tuned_value},
           {"delta1", s.delta1},
           {"delta2", s.delta2},
           {"delta_L", s.delta_L},
           {"delta_U", s.delta_U},
           {"regret_at_L", s.regret_at_L},
           {"regret_at_U", s.regret_at_U},
           {"fallback", s.fallback}};
    if (alpha) j["alpha"] = *alpha;
    out << j.dump(2) << '\n';
    return;
  }
  out << "n1,n2";
  if (alpha) out << ",alpha";
  out << ',' << tuned_name << ",delta1,delta2,delta_L,delta_U,regret_at_L,regret_at_U,fallback\n";
  out << design.n1() << ',' << design.n2();
  if (alpha) out << ',' << csv_number(*alpha);
  out << ',' << csv_number(s.tuned_value) << ',' << csv_number(s.delta1) << ','
      << csv_number(s.delta2) << ',' << csv_number(s.delta_L) << ',' << csv_number(s.delta_U)
      << ',' << csv_number(s.regret_at_L) << ',' << csv_number(s.regret_at_U) << ','
      << (s.fallback ? "true" : "false") << '\n';
}

void write_mc(std::ostream& out, const McReport& report, Format format) {
  const SimConfig& cfg = report.config;
  if (format == Format::Json) {
    auto stats = [](const EstimatorStats& s) {
      return json{{"bias", s.bias},          {"bias_se", s.bias_se},
                  {"mse", s.mse},            {"mse_se", s.mse_se},
                  {"efficiency", s.efficiency}, {"efficiency_se", s.efficiency_se}};
    };
    json rows = json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"theta2", r.theta2},
                      {"mle", stats(r.mle)},
                      {"pt", stats(r.pt)},
                      {"shrink", stats(r.shrink)}});
    }
    json j{{"n1", cfg.design.n1()},
           {"n2", cfg.design.n2()},
           {"variant", std::string(to_string(cfg.design.variant()))},
           {"theta1", cfg.theta1},
           {"alpha", cfg.alpha},
           {"k", cfg.k},
           {"replicates", cfg.replicates},
           {"seed", cfg.seed},
           {"rows", rows}};
    out << j.dump(2) << '\n';
    return;
  }
  out << "n1,n2,theta2,bias_mle,bias_pt,bias_s,eff_pt,eff_s\n";
  for (const auto& r : report.rows) {
    out << cfg.design.n1() << ',' << cfg.design.n2() << ',' << csv_number(r.theta2) << ','
        << csv_number(r.mle.bias) << ',' << csv_number(r.pt.bias) << ','
        << csv_number(r.shrink.bias) << ',' << csv_number(r.pt.efficiency) << ','
        << csv_number(r.shrink.efficiency) << '\n';
  }
}

void write_validation(std::ostream& out, const std::vector<ValidationCell>& cells,
                      std::optional<BoundConvention> selected, std::int64_t replicates,
                      std::uint64_t seed, Format format) {
  const std::string verdict =
      selected ? std::string(selected == BoundConvention::DerivedRatio ? "DerivedRatio" : "PaperLinear")
               : std::string("none");
  if (format == Format::Json) {
    json arr = json::array();
    for (const auto& c : cells) {
      arr.push_back({{"n1", c.n1},
                     {"n2", c.n2},
                     {"delta", c.delta},
                     {"alpha", c.alpha},
                     {"k", c.k},
                     {"oracle", c.oracle},
                     {"oracle_se", c.oracle_se},
                     {"closed_derived", c.closed_derived},
                     {"z_derived", z_score(c.closed_derived, c.oracle, c.oracle_se)},
                     {"closed_paper", c.closed_paper},
                     {"z_paper", z_score(c.closed_paper, c.oracle, c.oracle_se)}});
    }
    json j{{"replicates", replicates}, {"seed", seed}, {"selected", verdict}, {"cells", arr}};
    out << j.dump(2) << '\n';
    return;
  }
  out << "n1,n2,delta,alpha,k,oracle,oracle_se,closed_derived,z_derived,closed_paper,z_paper\n";
  for (const auto& c : cells) {
    out << c.n1 << ',' << c.n2 << ',' << csv_number(c.delta) << ',' << csv_number(c.alpha) << ','
        << csv_number(c.k) << ',' << csv_number(c.oracle) << ',' << csv_number(c.oracle_se) << ','
        << csv_number(c.closed_derived) << ','
        << csv_number(z_score(c.closed_derived, c.oracle, c.oracle_se)) << ','
        << csv_number(c.closed_paper) << ','
        << csv_number(z_score(c.closed_paper, c.oracle, c.oracle_se)) << '\n';
  }
  out << "# convention: " << verdict << " selected\n";
}

}  // namespace ptrec::cli
