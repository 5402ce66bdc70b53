#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "qstab/stabilize.hpp"

namespace qstab {

namespace detail {

inline std::string join_dim(const DimVector& v, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

// indices certified at row n: certified_index exists and is <= n
inline std::string certified_at(const SweepReport& rep, long long n) {
  std::ostringstream os;
  bool first = true;
  for (const auto& cs : rep.coefficients)
    if (cs.certified_index && *cs.certified_index <= n) {
      if (!first) os << ";";
      os << cs.i;
      first = false;
    }
  return os.str();
}

inline std::string verdicts_joined(const SweepReport& rep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rep.coefficients.size(); ++i) {
    if (i) os << ";";
    os << verdict_name(rep.coefficients[i].verdict);
  }
  return os.str();
}

} // namespace detail

inline std::string sweep_report_csv(const SweepReport& rep) {
  std::ostringstream os;
  os << "n,tau,indivisible,deg";
  for (long long i = 0; i <= rep.depth; ++i) os << ",a_" << i;
  os << ",certified,verdict\n";
  std::string verdicts = detail::verdicts_joined(rep);
  for (const auto& row : rep.rows) {
    os << row.n << "," << detail::join_dim(row.tau) << ","
       << (row.indivisible ? "true" : "false") << "," << row.deg;
    for (long long i = 0; i <= rep.depth; ++i) {
      os << ",";
      if (row.indivisible) os << row.a[static_cast<std::size_t>(i)];
    }
    os << "," << detail::certified_at(rep, row.n) << "," << verdicts << "\n";
  }
  return os.str();
}

inline nlohmann::json sweep_report_json(const SweepReport& rep) {
  nlohmann::json j;
  j["d"] = rep.d;
  j["delta"] = rep.delta;
  j["form"] = rep.form == BilinearForm::euler ? "euler" : "cartan";
  j["n_lo"] = rep.n_lo;
  j["n_hi"] = rep.n_hi;
  j["depth"] = rep.depth;
  j["star_strict_ok"] = rep.star_ok;
  j["limit"] = nlohmann::json::array();
  for (const auto& c : rep.limit) j["limit"].push_back(Rat(c).str());
  j["rows"] = nlohmann::json::array();
  for (const auto& row : rep.rows) {
    nlohmann::json r;
    r["n"] = row.n;
    r["tau"] = row.tau;
    r["indivisible"] = row.indivisible;
    r["deg"] = row.deg;
    r["a"] = nlohmann::json::array();
    for (const auto& a : row.a) r["a"].push_back(a.str());
    r["certified"] = detail::certified_at(rep, row.n);
    if (row.m_n) r["m_n"] = row.m_n->str();
    if (row.m_n_other) r["m_n_other"] = row.m_n_other->str();
    if (row.max_pairing_value) r["max_pairing"] = *row.max_pairing_value;
    j["rows"].push_back(std::move(r));
  }
  j["coefficients"] = nlohmann::json::array();
  for (const auto& cs : rep.coefficients) {
    nlohmann::json c;
    c["i"] = cs.i;
    c["stabilized"] = cs.stabilized;
    if (cs.stabilized) c["stable_value"] = cs.stable_value.str();
    if (cs.empirical_index) c["empirical_index"] = *cs.empirical_index;
    if (cs.certified_index) c["certified_index"] = *cs.certified_index;
    c["limit"] = cs.limit_coeff.str();
    c["verdict"] = verdict_name(cs.verdict);
    j["coefficients"].push_back(std::move(c));
  }
  return j;
}

inline std::string sweep_report_text(const SweepReport& rep) {
  std::ostringstream os;
  os << "sweep d=(" << detail::join_dim(rep.d, ",") << ") delta=("
     << detail::join_dim(rep.delta, ",") << ") form="
     << (rep.form == BilinearForm::euler ? "euler" : "cartan") << " n=" << rep.n_lo << ".."
     << rep.n_hi << " depth=" << rep.depth << "\n";
  os << "strict star for this form: " << (rep.star_ok ? "holds" : "fails")
     << (rep.star_ok ? "" : " (no certified thresholds)") << "\n";
  os << "limit coefficients:";
  for (const auto& c : rep.limit) os << " " << c;
  os << "\n\n";
  for (const auto& row : rep.rows) {
    os << "n=" << row.n << " tau=(" << detail::join_dim(row.tau, ",") << ")";
    if (!row.indivisible) {
      os << " skipped (divisible)\n";
      continue;
    }
    os << " deg=" << row.deg << " a=";
    for (std::size_t i = 0; i < row.a.size(); ++i) os << (i ? "," : "") << row.a[i];
    if (row.m_n) os << " M_n=" << *row.m_n;
    if (row.max_pairing_value) os << " max_pairing=" << *row.max_pairing_value;
    std::string cert = detail::certified_at(rep, row.n);
    if (!cert.empty()) os << " certified={" << cert << "}";
    os << "\n";
  }
  os << "\n";
  for (const auto& cs : rep.coefficients) {
    os << "a_" << cs.i << ": ";
    if (cs.stabilized) {
      os << "stabilized at " << cs.stable_value;
      if (cs.empirical_index) os << " (from n=" << *cs.empirical_index << ")";
    } else {
      os << "not stabilized in range";
    }
    if (cs.certified_index) os << ", certified from n=" << *cs.certified_index;
    os << ", limit " << cs.limit_coeff << " -> " << verdict_name(cs.verdict) << "\n";
  }
  return os.str();
}

} // namespace qstab
