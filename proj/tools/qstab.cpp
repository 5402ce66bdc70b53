// qstab: exact Kac-polynomial and stabilization computations for quivers.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qstab/hua.hpp"
#include "qstab/nakajima.hpp"
#include "qstab/oracle.hpp"
#include "qstab/quiver_io.hpp"
#include "qstab/report_io.hpp"
#include "qstab/stabilize.hpp"

namespace {

using namespace qstab;

QuiverDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open quiver file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return QuiverDocument::parse(buf.str());
}

// "1,2,0" or the name of a vector defined in the document
DimVector parse_dim(const std::string& text, const QuiverDocument& doc, bool framing = false) {
  const auto& named = framing ? doc.framings : doc.vectors;
  auto it = named.find(text);
  if (it != named.end()) return it->second;
  DimVector v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw validation_error("bad dimension vector component '" + tok + "'");
    }
  }
  if (v.empty()) throw validation_error("empty dimension vector");
  return v;
}

std::pair<long long, long long> parse_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos)
    throw validation_error("range must be of the form A..B");
  try {
    return {std::stoll(text.substr(0, pos)), std::stoll(text.substr(pos + 2))};
  } catch (const std::exception&) {
    throw validation_error("bad range '" + text + "'");
  }
}

BilinearForm parse_form(const std::string& s) {
  if (s == "euler") return BilinearForm::euler;
  if (s == "cartan") return BilinearForm::cartan;
  throw validation_error("form must be euler or cartan");
}

void emit_sweep(const SweepReport& rep, const std::string& format) {
  if (format == "csv")
    std::cout << sweep_report_csv(rep);
  else if (format == "json")
    std::cout << sweep_report_json(rep).dump(2) << "\n";
  else
    std::cout << sweep_report_text(rep);
}

std::string star_report_text(const StarReport& rep, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "form=" << (rep.form_used == BilinearForm::euler ? "euler" : "cartan")
     << " strictness=" << (rep.strictness == Strictness::strict ? "strict" : "weak")
     << " dist=" << (rep.dist_interpretation == DistInterpretation::proof ? "proof" : "literal")
     << "\n";
  for (std::size_t i = 0; i < rep.vertices.size(); ++i) {
    const auto& v = rep.vertices[i];
    os << "vertex " << labels[i] << ": <e,delta>=" << v.left_pairing
       << (v.left_ok ? " ok" : " FAIL") << ", <delta,e>=" << v.right_pairing
       << (v.right_ok ? " ok" : " FAIL") << "\n";
  }
  os << "support components: " << (rep.components_ok ? "ok" : "FAIL")
     << " (max distance " << rep.max_component_distance << ")\n";
  os << "overall: " << (rep.overall ? "holds" : "fails") << "\n";
  return os.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Kac polynomials, stabilization sweeps, and oracles for quivers"};
  app.require_subcommand(1);

  std::string quiver_path, format = "text";
  long long threads = 1, cap = 10'000'000;
  app.add_option("--threads", threads, "worker cap (computations are deterministic)");
  app.add_option("--cap", cap, "enumeration cap override");

  std::string d_str, v_str, delta_str, w_str, tau_str, n_range, form_str = "euler";
  std::string route = "log", mode = "kac", strict_str, dist_str = "proof";
  std::string orders_str, identity_str, census_primes;
  long long depth = 2, r_param = 2, n_param = 0, max_parts = 4;
  std::optional<long long> b_param;
  bool thin_flag = false, weak_flag = false, strict_flag = false;

  auto add_quiver = [&](CLI::App* c) {
    c->add_option("--quiver", quiver_path, "quiver document file")->required();
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "csv|json|text");
  };

  auto* c_form = app.add_subcommand("form", "evaluate the Euler or Cartan form");
  add_quiver(c_form);
  c_form->add_option("--d", d_str)->required();
  c_form->add_option("--v", v_str)->required();
  c_form->add_option("--form", form_str, "euler|cartan");

  auto* c_root = app.add_subcommand("root-type", "classify d as real/imaginary/not a root");
  add_quiver(c_root);
  c_root->add_option("--d", d_str)->required();

  auto* c_star = app.add_subcommand("star", "check the support condition for delta");
  add_quiver(c_star);
  c_star->add_option("--delta", delta_str)->required();
  c_star->add_option("--form", form_str, "euler|cartan");
  c_star->add_flag("--strict", strict_flag, "strict inequalities (default)");
  c_star->add_flag("--weak", weak_flag, "non-strict inequalities");
  c_star->add_option("--dist-interpretation", dist_str, "proof|literal");

  auto* c_kac = app.add_subcommand("kac", "Kac polynomial of an indivisible d");
  add_quiver(c_kac);
  c_kac->add_option("--d", d_str)->required();
  c_kac->add_option("--route", route, "log|decomp|both");

  auto* c_sweep = app.add_subcommand("sweep", "Kac coefficients along d + n*delta");
  add_quiver(c_sweep);
  add_format(c_sweep);
  c_sweep->add_option("--d", d_str)->required();
  c_sweep->add_option("--delta", delta_str)->required();
  c_sweep->add_option("--n", n_range, "range A..B")->required();
  c_sweep->add_option("--depth", depth, "top coefficients a_0..a_K");
  c_sweep->add_option("--mode", mode, "cohomology|kac|conjecture");

  auto* c_hn = app.add_subcommand("hn", "minimum HN stratum codimension and pairing maximum");
  add_quiver(c_hn);
  c_hn->add_option("--tau", tau_str)->required();
  c_hn->add_option("--max-parts", max_parts);

  auto* c_chi = app.add_subcommand("generic-chi", "a generic character for d");
  add_quiver(c_chi);
  c_chi->add_option("--d", d_str)->required();

  auto* c_cb = app.add_subcommand("cb", "Crawley-Boevey quiver for a framing w");
  add_quiver(c_cb);
  c_cb->add_option("--w", w_str)->required();

  auto* c_nak = app.add_subcommand("nakajima-sweep", "sweep on the CB quiver at (d + n*delta, 1)");
  add_quiver(c_nak);
  add_format(c_nak);
  c_nak->add_option("--w", w_str)->required();
  c_nak->add_option("--d", d_str)->required();
  c_nak->add_option("--delta", delta_str)->required();
  c_nak->add_option("--n", n_range, "range A..B")->required();
  c_nak->add_option("--depth", depth);

  auto* c_hil = app.add_subcommand("hilbert", "Hilbert-scheme style bivariate product");
  c_hil->add_option("--r", r_param, "rank (default exponent b = r-1)");
  c_hil->add_option("--b", b_param, "explicit exponent b");
  c_hil->add_option("--orders", orders_str, "NT,NQ truncation orders")->required();
  c_hil->add_option("--identity", identity_str, "k,a coefficient identity check");

  auto* c_orc = app.add_subcommand("oracle", "independent counts: thin formula or census");
  add_quiver(c_orc);
  c_orc->add_option("--d", d_str)->required();
  c_orc->add_flag("--thin", thin_flag, "thin combinatorial count");
  c_orc->add_option("--census-primes", census_primes, "comma-separated primes");

  auto* c_bound = app.add_subcommand("bound", "closed-form stabilization bound M_n");
  add_quiver(c_bound);
  c_bound->add_option("--d", d_str)->required();
  c_bound->add_option("--delta", delta_str)->required();
  c_bound->add_option("--n", n_param)->required();
  c_bound->add_option("--form", form_str, "euler|cartan");

  CLI11_PARSE(app, argc, argv);
  if (threads < 1) {
    std::cerr << "error: --threads must be positive\n";
    return 1;
  }

  try {
    if (c_form->parsed()) {
      auto doc = load_document(quiver_path);
      Quiver q = doc.to_quiver();
      std::cout << bilinear(q, parse_form(form_str), parse_dim(d_str, doc),
                            parse_dim(v_str, doc))
                << "\n";
    } else if (c_root->parsed()) {
      auto doc = load_document(quiver_path);
      Quiver q = doc.to_quiver();
      switch (root_type(q, parse_dim(d_str, doc))) {
        case RootType::real: std::cout << "real\n"; break;
        case RootType::imaginary: std::cout << "imaginary\n"; break;
        default: std::cout << "not_root\n"; break;
      }
    } else if (c_star->parsed()) {
      auto doc = load_document(quiver_path);
      Quiver q = doc.to_quiver();
      if (weak_flag && strict_flag)
        throw validation_error("choose one of --strict/--weak");
      Strictness s = weak_flag ? Strictness::weak : Strictness::strict;
      DistInterpretation di;
      if (dist_str == "proof") di = DistInterpretation::proof;
      else if (dist_str == "literal") di = DistInterpretation::literal;
      else throw validation_error("dist-interpretation must be proof or literal");
      auto rep = check_star(q, parse_dim(delta_str, doc), parse_form(form_str), s, di);
      std::cout << star_report_text(rep, q.labels());
    } else if (c_kac->parsed()) {
      auto doc = load_document(quiver_path);
      Quiver q = doc.to_quiver();
      DimVector d = parse_dim(d_str, doc);
      if (route == "log") {
        std::cout << kac_polynomial(q, d).str() << "\n";
      } else if (route == "decomp") {
        std::cout << kac_polynomial_decomposition_route(q, d).str() << "\n";
      } else if (route == "both") {
        QPolynomial a = kac_polynomial(q, d);
        QPolynomial b = kac_polynomial_decomposition_route(q, d);
        std::cout << a.str() << "\n";
        if (a != b) throw internal_error("evaluation routes disagree");
        std::cerr << "routes agree\n";
      } else {
        throw validation_error("route must be log, decomp, or both");
      }
    } else if (c_sweep->parsed()) {
      auto doc = load_document(quiver_path);
      Quiver q = doc.to_quiver();
      auto [lo, hi] = parse_range(n_range);
      BilinearForm f;
      if (mode == "cohomology") f = BilinearForm::euler;
      else if (mode == "kac" || mode == "conjecture") f = BilinearForm::cartan;
      else throw validation_error("mode must be cohomology, kac, or conjecture");
      SweepOptions opts;
      opts.pairing_cap = cap;
      std::cerr << "sweeping n=" << lo << ".." << hi << "\n";
      auto rep = kac_sweep(q, parse_dim(d_str, doc), parse_dim(delta_str, doc), f, lo, hi,
                           depth, opts);
      emit_sweep(rep, format);
    } else if (c_hn->parsed()) {
      auto doc = load_document(quiver_path);
      Quiver q = doc.to_quiver();
      DimVector tau = parse_dim(tau_str, doc);
      auto mp = max_pairing(q, tau, BilinearForm::euler, cap);
      std::cout << "min_codim " << -mp.value << "\n";
      std::cout << "max_pairing " << mp.value << " at";
      for (long long v : mp.argmax) std::cout << " " << v;
      std::cout << "\n";
      std::cout << "multi_part_max "
                << multi_part_max(q, tau, BilinearForm::euler, max_parts, cap) << "\n";
    } else if (c_chi->parsed()) {
      auto doc = load_document(quiver_path);
      Quiver q = doc.to_quiver();
      Character chi = generic_character(q, parse_dim(d_str, doc));
      for (std::size_t i = 0; i < chi.size(); ++i) std::cout << (i ? "," : "") << chi[i];
      std::cout << "\n";
    } else if (c_cb->parsed()) {
      auto doc = load_document(quiver_path);
      Quiver q = doc.to_quiver();
      Quiver cb = crawley_boevey(q, parse_dim(w_str, doc, true));
      std::cout << QuiverDocument::from_quiver(cb).dump();
    } else if (c_nak->parsed()) {
      auto doc = load_document(quiver_path);
      Quiver q = doc.to_quiver();
      auto [lo, hi] = parse_range(n_range);
      NakajimaInstance inst(q, parse_dim(w_str, doc, true), parse_dim(d_str, doc),
                            parse_dim(delta_str, doc));
      SweepOptions opts;
      opts.pairing_cap = cap;
      std::cerr << "sweeping n=" << lo << ".." << hi << " on the CB quiver\n";
      emit_sweep(nakajima_kac_sweep(inst, lo, hi, depth, opts), format);
    } else if (c_hil->parsed()) {
      auto pos = orders_str.find(',');
      if (pos == std::string::npos) throw validation_error("--orders must be NT,NQ");
      std::size_t nt = std::stoull(orders_str.substr(0, pos));
      std::size_t nq = std::stoull(orders_str.substr(pos + 1));
      long long b = b_param ? *b_param : r_param - 1;
      if (!b_param && r_param < 2) throw validation_error("rank must be >= 2");
      auto h = hilbert_series(b, nt, nq);
      for (std::size_t i = 0; i <= nt; ++i) {
        for (std::size_t j = 0; j <= nq; ++j) std::cout << (j ? "," : "") << h.coeff(i, j);
        std::cout << "\n";
      }
      if (!identity_str.empty()) {
        auto p2 = identity_str.find(',');
        if (p2 == std::string::npos) throw validation_error("--identity must be k,a");
        long long k = std::stoll(identity_str.substr(0, p2));
        long long a = std::stoll(identity_str.substr(p2 + 1));
        auto id = hilbert_coefficient_identity_check(b, k, a);
        std::cout << "identity k=" << k << " a=" << a << ": lhs=" << id.lhs
                  << " rhs=" << id.rhs << " equal=" << (id.equal ? "yes" : "no");
        if (id.limit) std::cout << " limit=" << *id.limit;
        std::cout << "\n";
      }
    } else if (c_orc->parsed()) {
      auto doc = load_document(quiver_path);
      Quiver q = doc.to_quiver();
      DimVector d = parse_dim(d_str, doc);
      if (thin_flag == !census_primes.empty())
        throw validation_error("choose exactly one of --thin/--census-primes");
      if (thin_flag) {
        std::cout << thin_kac(q, d).str() << "\n";
      } else {
        std::vector<long long> primes;
        std::stringstream ss(census_primes);
        std::string tok;
        while (std::getline(ss, tok, ',')) primes.push_back(std::stoll(tok));
        CensusCaps caps;
        caps.rep_cap = cap;
        for (long long p : primes) {
          auto c = census(q, d, p, caps);
          std::cerr << "p=" << p << ": " << c.classes << " classes in " << c.millis << " ms\n";
          std::cout << "p=" << p << " total=" << c.total << " classes=" << c.classes
                    << " indec=" << c.indecomposable << " abs_indec=" << c.abs_indecomposable
                    << "\n";
        }
        std::cout << brute_force_kac(q, d, primes, caps).str() << "\n";
      }
    } else if (c_bound->parsed()) {
      auto doc = load_document(quiver_path);
      Quiver q = doc.to_quiver();
      std::cout << stab_bound_Mn(q, parse_dim(d_str, doc), parse_dim(delta_str, doc), n_param,
                                 parse_form(form_str))
                << "\n";
    }
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
