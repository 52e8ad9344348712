#pragma once

// Command-line front end.  Every subcommand builds a JSON payload (possibly
// from the cache) and renders text from it, so hits and misses print the
// same bytes.

#include "spingrass/cache.hpp"
#include "spingrass/dims.hpp"
#include "spingrass/dirac.hpp"
#include "spingrass/identities.hpp"
#include "spingrass/lr.hpp"
#include "spingrass/serialize.hpp"
#include "spingrass/spinor_decomp.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace spingrass::cli {

enum Status { OK = 0, CHECK_FAILED = 1, USAGE = 2 };

namespace detail {

inline std::string big_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

inline std::string partition_text(const json& j) { return partition_from_json(j).to_string(); }

inline json cached(const Cache& cache, const std::string& key, const std::function<json()>& compute) {
  if (auto hit = cache.load(key)) return *hit;
  json payload = compute();
  cache.store(key, payload);
  return payload;
}

// ---- payloads -------------------------------------------------------------

inline json decompose_payload(int k, int l, GrassmannCase kase) {
  return {{"k", k}, {"l", l}, {"case", to_string(kase)}, {"decomposition", to_json(decompose(k, l, kase))}};
}

inline json table1_payload() {
  json rows = json::array();
  for (const char* w : {"[0,0]", "[1,0]", "[1,1]", "[1,-1]", "[2,0]", "[2,2]", "[2,-2]", "[2,1]", "[2,-1]"}) {
    const Weight x = Weight::parse(AlgebraId::so_even(2), w);
    rows.push_back({{"weight", x.to_string()}, {"dimension", big_to_json(dimension(x))}});
  }
  return {{"algebra", "so(4)"}, {"rows", rows}};
}

inline json verify_payload(const std::string& what, int max_n, int k, int l) {
  std::vector<IdentityReport> reports;
  const bool single = k > 0 && l > 0;
  if (what == "master" || what == "master2") {
    const auto kase = what == "master" ? GrassmannCase::EVEN : GrassmannCase::ODD;
    std::vector<std::pair<int, int>> cases;
    if (single) {
      cases = {{k, l}};
    } else if (kase == GrassmannCase::EVEN) {
      cases = {{2, 2}, {3, 2}, {4, 2}, {5, 2}, {3, 3}, {4, 3}};
    } else {
      for (int a = 1; a <= 8; ++a) cases.emplace_back(a, 1);
      for (int a = 2; a <= 8; ++a) cases.emplace_back(a, 2);
    }
    for (auto [a, b] : cases) reports.push_back(verify_dimension_identity(a, b, kase));
  } else if (what == "lemma4") {
    for (int n = 1; n <= (max_n > 0 ? max_n : 10); ++n) {
      const auto r = check_lemma4(n);
      const std::string p = "n=" + std::to_string(n);
      reports.push_back({"lemma4-double-sum", p, r.double_sum, r.rhs, r.double_sum == r.rhs});
      reports.push_back({"lemma4-b-form", p, r.b_form, r.rhs, r.b_form == r.rhs});
    }
  } else if (what == "bnk") {
    const int top = max_n > 0 ? max_n : 12;
    for (int n = 0; n <= top; ++n) {
      for (int j = 0; j <= 5; ++j) {
        const BigInt direct = bnk_direct(n, j);
        const BigRational closed = bnk_closed(n, j);
        const std::string p = "n=" + std::to_string(n) + " k=" + std::to_string(j);
        reports.push_back({"bnk", p, direct, numerator(closed), BigRational(direct) == closed});
        if (n >= 1 && n <= std::min(top, 10)) {
          BigInt bt = 0;
          for (int i = 0; i <= n; ++i) bt += ipow(BigInt(i), j) * binomial(2 * n - 1, n - i);
          const BigInt lhs = 2 * n * bt, rhs = n * direct + bnk_direct(n, j + 1);
          reports.push_back({"btilde", p, lhs, rhs, lhs == rhs});
        }
        if (n <= std::min(top, 8)) {
          const auto q = q_coefficient_routes(n, j);
          reports.push_back({"q-coefficient", p, q.from_polynomial, numerator(q.from_q), q.consistent()});
        }
      }
    }
  } else if (what == "odd-l2") {
    if (k > 0) {
      reports.push_back(check_odd_l2(k));
    } else {
      for (int a = 1; a <= (max_n > 0 ? max_n : 8); ++a) reports.push_back(check_odd_l2(a));
    }
  } else {
    throw precondition_error("verify: unknown identity '" + what + "'");
  }
  json arr = json::array();
  bool pass = true;
  for (const auto& r : reports) {
    arr.push_back(to_json(r));
    pass = pass && r.pass;
  }
  return {{"identity", what}, {"reports", arr}, {"pass", pass}};
}

inline json dirac_payload(const std::string& mode, int k, int l, long bound, int kappa, bool exact) {
  const GrassmannEven space(k, l);
  json p = {{"mode", mode}, {"k", k}, {"l", l}};
  if (mode == "min") {
    const auto r = min_eigenvalue_report(space);
    p["value"] = rational_to_json(r.value());
    p["route_psi"] = rational_to_json(r.from_psi);
    p["route_closed"] = rational_to_json(r.closed);
    p["route_decomposition"] = r.from_decomposition ? rational_to_json(*r.from_decomposition) : json(nullptr);
    p["min_norm"] = r.min_norm ? rational_to_json(*r.min_norm) : json(nullptr);
    p["decomposition_used"] = r.decomposition_used;
    p["pass"] = true;
  } else if (mode == "spectrum") {
    const auto entries = exact ? exact_spectrum(space, bound) : enumerate_spectrum(space, bound, kappa);
    json arr = json::array();
    for (const auto& e : entries) arr.push_back(to_json(e));
    p["bound"] = bound;
    p["kappa_boxes"] = exact ? json(nullptr) : json(kappa);
    p["exact"] = exact;
    p["entries"] = arr;
  } else if (mode == "minimal-weights") {
    auto label = [&](const std::pair<Partition, Partition>& w) {
      std::string s = "(";
      for (int v : w.first.padded(k)) s += std::to_string(v) + ",";
      s.back() = '|';
      for (int v : w.second.padded(l)) s += std::to_string(v) + ",";
      s.back() = ')';
      return s;
    };
    const auto formula = minimal_weights(space);
    json f = json::array();
    for (const auto& w : formula) f.push_back(label(w));
    p["formula"] = f;
    if (2 * k * l <= kDecompositionLimit) {
      const auto found = minimal_weights_from_decomposition(decompose(k, l, GrassmannCase::EVEN));
      json a = json::array();
      for (const auto& w : found) a.push_back(label(w));
      p["argmin"] = a;
      p["pass"] = found == formula;
    } else {
      p["argmin"] = nullptr;
      p["pass"] = true;
    }
  } else if (mode == "lambda0") {
    p["lambda0"] = to_json(smallest_contribution(space));
    json arr = json::array();
    for (const auto& e : minimal_pair_products(space)) arr.push_back(to_json(e));
    p["products"] = arr;
  } else {
    throw precondition_error("dirac: unknown mode '" + mode + "'");
  }
  return p;
}

inline std::vector<std::vector<int>> read_matrix(const std::string& file) {
  std::ifstream in(file);
  require(static_cast<bool>(in), "cannot open matrix file '" + file + "'");
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      require(used == tok.size() && !tok.empty(), "matrix entry is not an integer: '" + tok + "'");
      row.push_back(v);
    }
    if (row.empty()) continue;
    require(rows.empty() || row.size() == rows.front().size(), "matrix rows have different lengths");
    rows.push_back(std::move(row));
  }
  require(!rows.empty(), "matrix file '" + file + "' is empty");
  return rows;
}

inline json project_payload(const std::vector<std::vector<int>>& m, const std::string& algebra,
                            const std::string& unit) {
  const auto images = project_generic(m);
  json p = {{"matrix", m}};
  json img = json::array();
  for (const auto& [key, c] : images.entries()) img.push_back({{"doubled", key}, {"multiplicity", big_to_json(c)}});
  p["images"] = img;
  if (!algebra.empty()) {
    std::vector<AlgebraId> factors;
    std::stringstream ss(algebra);
    std::string part;
    while (std::getline(ss, part, '+')) factors.push_back(AlgebraId::parse(part));
    const auto scaled = rescale(images, ProductAlgebra(factors), parse_rational(unit));
    p["unit"] = unit;
    p["decomposition"] = to_json(peel(scaled));
  }
  return p;
}

// ---- rendering ------------------------------------------------------------

inline void render_decomposition(std::ostream& out, const json& d) {
  std::vector<std::string> alg;
  for (const auto& a : d.at("algebra")) alg.push_back(a.get<std::string>());
  for (const auto& s : d.at("summands")) {
    const std::string c = s.at("chirality").get<std::string>();
    out << (c == "none" ? " " : c) << ' ' << std::left << std::setw(24) << s.at("label").get<std::string>() << ' ';
    std::string dims;
    const std::string mult = big_text(s.at("multiplicity"));
    if (mult != "1") dims = mult + "*";
    for (std::size_t i = 1; i <= alg.size(); ++i) {
      dims += (i > 1 ? "*" : "") + big_text(s.at("dim" + std::to_string(i)));
    }
    out << dims << " = " << big_text(s.at("dimension")) << '\n';
  }
  if (big_text(d.at("total_plus")) != "0" || big_text(d.at("total_minus")) != "0") {
    out << "S+ " << big_text(d.at("total_plus")) << '\n';
    out << "S- " << big_text(d.at("total_minus")) << '\n';
  }
  out << "total " << big_text(d.at("total")) << '\n';
}

inline void render_reports(std::ostream& out, const json& p) {
  for (const auto& r : p.at("reports")) {
    out << (r.at("pass").get<bool>() ? "PASS " : "FAIL ") << r.at("name").get<std::string>() << ' '
        << r.at("parameters").get<std::string>() << "  " << big_text(r.at("lhs")) << " = " << big_text(r.at("rhs"))
        << '\n';
  }
}

inline void render_spectrum_entry(std::ostream& out, const json& e) {
  out << std::left << std::setw(20) << partition_text(e.at("lambda")) << ' ' << std::setw(6)
      << big_text(e.at("casimir_eucl")) << ' ' << std::setw(10) << e.at("casimir_b").get<std::string>() << ' '
      << e.at("eigenvalue_sq").get<std::string>() << '\n';
}

inline void render_dirac(std::ostream& out, const json& p) {
  const std::string mode = p.at("mode").get<std::string>();
  out << "G(" << 2 * p.at("k").get<int>() << "," << 2 * p.at("l").get<int>() << ")\n";
  if (mode == "min") {
    out << "eps0^2 = " << p.at("value").get<std::string>() << '\n';
    out << "  psi form    " << p.at("route_psi").get<std::string>() << '\n';
    out << "  closed form " << p.at("route_closed").get<std::string>() << '\n';
    if (p.at("decomposition_used").get<bool>()) {
      out << "  spinor min  " << p.at("route_decomposition").get<std::string>() << "  (min |beta|^2 = "
          << p.at("min_norm").get<std::string>() << ")\n";
    } else {
      out << "  spinor min  skipped (decomposition too large)\n";
    }
  } else if (mode == "spectrum") {
    out << "bound " << p.at("bound").get<long>();
    if (p.at("exact").get<bool>()) {
      out << ", exact\n";
    } else {
      const int kb = p.at("kappa_boxes").get<int>();
      out << ", |kappa| <= " << (kb < 0 ? std::string("any") : std::to_string(kb)) << '\n';
    }
    out << std::left << std::setw(20) << "lambda" << ' ' << std::setw(6) << "c" << ' ' << std::setw(10) << "c_b" << ' '
        << "eps^2\n";
    for (const auto& e : p.at("entries")) render_spectrum_entry(out, e);
  } else if (mode == "minimal-weights") {
    for (const auto& w : p.at("formula")) out << w.get<std::string>() << '\n';
    if (p.at("argmin").is_null()) {
      out << "argmin check skipped (decomposition too large)\n";
    } else {
      out << "argmin of the decomposition " << (p.at("pass").get<bool>() ? "matches" : "DIFFERS") << '\n';
      if (!p.at("pass").get<bool>()) {
        for (const auto& w : p.at("argmin")) out << "  " << w.get<std::string>() << '\n';
      }
    }
  } else {
    out << "lambda0 ";
    render_spectrum_entry(out, p.at("lambda0"));
    out << "tensor products of the minimal pairs:\n";
    for (const auto& e : p.at("products")) render_spectrum_entry(out, e);
  }
}

inline void render(std::ostream& out, const std::string& command, const json& p) {
  if (command == "decompose" || command == "tables2" || command == "tables3") {
    out << "k=" << p.at("k").get<int>() << " l=" << p.at("l").get<int>() << " " << p.at("case").get<std::string>()
        << '\n';
    render_decomposition(out, p.at("decomposition"));
  } else if (command == "tables1") {
    for (const auto& r : p.at("rows")) {
      out << std::left << std::setw(10) << r.at("weight").get<std::string>() << big_text(r.at("dimension")) << '\n';
    }
  } else if (command == "dims") {
    out << p.at("algebra").get<std::string>() << ' ' << p.at("weight").get<std::string>() << ' '
        << big_text(p.at("dimension")) << '\n';
  } else if (command == "lr") {
    if (p.contains("coefficient")) {
      out << big_text(p.at("coefficient")) << '\n';
    } else {
      for (const auto& t : p.at("products")) {
        out << std::left << std::setw(20) << partition_text(t.at("lambda")) << big_text(t.at("multiplicity")) << '\n';
      }
    }
  } else if (command == "verify") {
    render_reports(out, p);
  } else if (command == "dirac") {
    render_dirac(out, p);
  } else if (command == "project") {
    for (const auto& i : p.at("images")) {
      std::string key;
      for (int v : i.at("doubled").get<std::vector<int>>()) key += (key.empty() ? "" : ",") + std::to_string(v);
      out << "[" << key << "] x" << big_text(i.at("multiplicity")) << '\n';
    }
    if (p.contains("decomposition")) {
      out << "unit " << p.at("unit").get<std::string>() << '\n';
      render_decomposition(out, p.at("decomposition"));
    }
  }
}

}  // namespace detail

/// Runs one command line; returns 0, 1 (a check failed) or 2 (usage).
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Spinor decompositions on Grassmannians, dimension identities and Dirac spectra", "spingrass"};
  app.require_subcommand(1);
  bool as_json = false, no_cache = false;
  app.add_flag("--json", as_json, "print the JSON payload");
  app.add_flag("--no-cache", no_cache, "ignore the on-disk cache");

  int k = 0, l = 0, max_n = 0, max_rows = -1, kappa = 1;
  long bound = 60;
  bool exact = false;
  std::string kase = "even", algebra, weight, via = "weyl", mu, nu, lambda, what, matrix, unit = "1/2";

  auto* dec = app.add_subcommand("decompose", "spinor module of a Grassmannian over so(m)+so(n)");
  dec->add_option("--k", k, "first block")->required();
  dec->add_option("--l", l, "second block")->required();
  dec->add_option("--case", kase, "even, odd or mixed")->check(CLI::IsMember({"even", "odd", "mixed"}));

  auto* dims = app.add_subcommand("dims", "dimension of one irreducible");
  dims->add_option("--algebra", algebra, "so(8), so(7), sp(4), gl(3)")->required();
  dims->add_option("--weight", weight, "highest weight, e.g. [3/2,1/2]")->required();
  dims->add_option("--via", via, "weyl, product, determinant or littlewood")
      ->check(CLI::IsMember({"weyl", "product", "determinant", "littlewood"}));

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient or product");
  lr->add_option("--mu", mu)->required();
  lr->add_option("--nu", nu)->required();
  lr->add_option("--lambda", lambda, "omit to list the whole product");
  lr->add_option("--max-rows", max_rows);

  auto* ver = app.add_subcommand("verify", "check an identity");
  ver->add_option("identity", what, "master, master2, lemma4, bnk or odd-l2")
      ->required()
      ->check(CLI::IsMember({"master", "master2", "lemma4", "bnk", "odd-l2"}));
  ver->add_option("--max-n", max_n);
  ver->add_option("--k", k);
  ver->add_option("--l", l);

  auto* tab = app.add_subcommand("tables", "1: so(4) dimensions, 2: G(8,4), 3: G(6,6)");
  tab->add_option("table", what)->required()->check(CLI::IsMember({"1", "2", "3"}));

  auto* dir = app.add_subcommand("dirac", "Dirac spectrum data on G(2k,2l)");
  dir->add_option("mode", what, "min, spectrum, minimal-weights or lambda0")
      ->required()
      ->check(CLI::IsMember({"min", "spectrum", "minimal-weights", "lambda0"}));
  dir->add_option("--k", k)->required();
  dir->add_option("--l", l)->required();
  dir->add_option("--bound", bound, "largest Euclidean Casimir to list");
  dir->add_option("--kappa-boxes", kappa, "largest |kappa| in the 2kappa expansion, -1 for no limit");
  dir->add_flag("--exact", exact, "no kappa limit, keep only lambda whose branching meets the spinor module");

  auto* proj = app.add_subcommand("project", "images of {+-1/2}^d under an integer matrix");
  proj->add_option("--matrix", matrix, "file with one whitespace-separated row per line")->required();
  proj->add_option("--algebra", algebra, "peel over this algebra, e.g. so(3) or so(4)+so(2)");
  proj->add_option("--unit", unit, "scale from images to weight coordinates");

  std::vector<const char*> argv{"spingrass"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? OK : USAGE;
  }

  const Cache cache = Cache::from_environment(!no_cache);
  std::string command;
  json payload;
  try {
    if (*dec) {
      command = "decompose";
      const auto c = parse_case(kase);
      payload = detail::cached(cache, "decompose-" + kase + "-" + std::to_string(k) + "-" + std::to_string(l),
                               [&] { return detail::decompose_payload(k, l, c); });
    } else if (*dims) {
      command = "dims";
      const auto a = AlgebraId::parse(algebra);
      const Weight w = Weight::parse(a, weight);
      BigInt d;
      if (via == "weyl") {
        d = dimension(w);
      } else if (via == "product") {
        d = dim_so_even_product(w);
      } else if (via == "determinant") {
        require(a.family == Family::SO_EVEN && w.is_integral(), "determinant form is for integral so(2k) weights");
        d = dim_so_even_determinant(w.integers());
      } else {
        require(w.is_integral(), "littlewood route needs an integral weight");
        d = dim_via_littlewood(Partition(w.integers()), a.rank, a.family);
      }
      payload = {{"algebra", a.name()}, {"weight", w.to_string()}, {"via", via}, {"dimension", big_to_json(d)}};
    } else if (*lr) {
      command = "lr";
      const auto m = Partition::parse(mu), n = Partition::parse(nu);
      payload = {{"mu", to_json(m)}, {"nu", to_json(n)}};
      if (!lambda.empty()) {
        const auto la = Partition::parse(lambda);
        payload["lambda"] = to_json(la);
        payload["coefficient"] = lr_coefficient(m, n, la);
      } else {
        json arr = json::array();
        for (const auto& [la, c] : lr_product(m, n, max_rows)) arr.push_back({{"lambda", to_json(la)}, {"multiplicity", c}});
        payload["products"] = arr;
      }
    } else if (*ver) {
      command = "verify";
      payload = detail::cached(cache,
                               "verify-" + what + "-" + std::to_string(max_n) + "-" + std::to_string(k) + "-" +
                                   std::to_string(l),
                               [&] { return detail::verify_payload(what, max_n, k, l); });
    } else if (*tab) {
      command = "tables" + what;
      if (what == "1") {
        payload = detail::table1_payload();
      } else {
        const int kk = what == "2" ? 4 : 3, ll = what == "2" ? 2 : 3;
        payload = detail::cached(cache, "decompose-even-" + std::to_string(kk) + "-" + std::to_string(ll),
                                 [&] { return detail::decompose_payload(kk, ll, GrassmannCase::EVEN); });
      }
    } else if (*dir) {
      command = "dirac";
      std::string key = "dirac-" + what + "-" + std::to_string(k) + "-" + std::to_string(l);
      if (what == "spectrum") {
        key += "-" + std::to_string(bound) + (exact ? std::string("-exact") : "-" + std::to_string(kappa));
      }
      payload = detail::cached(cache, key, [&] { return detail::dirac_payload(what, k, l, bound, kappa, exact); });
    } else if (*proj) {
      command = "project";
      payload = detail::project_payload(detail::read_matrix(matrix), algebra, unit);
    }
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << '\n';
    return USAGE;
  } catch (const consistency_error& e) {
    err << "check failed: " << e.what() << '\n';
    return CHECK_FAILED;
  }

  if (as_json) {
    out << payload.dump(2) << '\n';
  } else {
    detail::render(out, command, payload);
  }
  if (payload.contains("pass") && !payload.at("pass").get<bool>()) return CHECK_FAILED;
  return OK;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace spingrass::cli
