#include "vvmf/textio.hpp"

#include <fstream>
#include <sstream>

namespace vvmf {

namespace {

struct Lines {
  std::istream& is;
  int number = 0;

  // Next non-empty line split into tokens; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(is, line)) {
      ++number;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      tokens.clear();
      for (std::string t; ls >> t;) tokens.push_back(t);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("line " + std::to_string(number) + ": " + what);
  }
};

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  const long long v = std::stoll(s, &used);
  if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

}  // namespace

RatVector parse_coords(const std::string& text) {
  RatVector out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(Frac::parse(item));
  return out;
}

VVForm read_vvform(std::istream& is) {
  Lines in{is};
  std::vector<std::string> t;
  IntMatrix gram;
  Frac weight, prec;
  bool have_weight = false, have_prec = false;
  Rep rep = Rep::rho;
  DiscPtr disc;
  std::vector<FracSeries> comps;
  std::size_t current = 0;
  bool in_coset = false;

  auto ensure_disc = [&] {
    if (disc) return;
    if (gram.empty() || !have_weight || !have_prec) in.fail("gram, weight and prec must precede the first coset");
    disc = make_disc(EvenLattice(gram));
    comps.assign(disc->size(), FracSeries(prec));
  };

  while (in.next(t)) {
    const std::string& key = t[0];
    if (key == "gram") {
      std::vector<std::string> row;
      std::size_t n = 0;
      do {
        if (!in.next(row)) in.fail("truncated Gram matrix");
        if (n == 0) n = row.size();
        if (row.size() != n) in.fail("Gram row has the wrong length");
        std::vector<std::int64_t> r;
        for (const auto& s : row) r.push_back(parse_int(s));
        gram.push_back(std::move(r));
      } while (gram.size() < n);
    } else if (key == "weight" && t.size() == 2) {
      weight = Frac::parse(t[1]);
      have_weight = true;
    } else if (key == "rep" && t.size() == 2) {
      rep = parse_rep(t[1]);
    } else if (key == "prec" && t.size() == 2) {
      prec = Frac::parse(t[1]);
      have_prec = true;
    } else if (key == "coset") {
      ensure_disc();
      RatVector coords;
      for (std::size_t i = 1; i < t.size(); ++i) coords.push_back(Frac::parse(t[i]));
      current = disc->index_of(coords);
      in_coset = true;
    } else if (key == "eta") {
      if (!in_coset) in.fail("eta line outside a coset block");
      if (t.size() < 3) in.fail("eta needs a coefficient and at least one factor");
      std::vector<EtaFactor> factors;
      Frac lead;
      for (std::size_t i = 2; i < t.size(); ++i) {
        const auto colon = t[i].find(':');
        if (colon == std::string::npos) in.fail("eta factor must be m:r");
        factors.push_back({parse_int(t[i].substr(0, colon)), parse_int(t[i].substr(colon + 1))});
        lead += Frac(static_cast<long>(factors.back().multiplier * factors.back().power), 24);
      }
      if (lead < prec) comps[current] = comps[current] + Frac::parse(t[1]) * eta_quotient(factors, prec);
    } else if (t.size() == 2 && in_coset) {
      const Frac e = Frac::parse(t[0]);
      if (e >= prec) in.fail("exponent " + e.str() + " is not below prec " + prec.str());
      comps[current] = comps[current] + FracSeries(prec, {{e, Frac::parse(t[1])}});
    } else {
      in.fail("unexpected '" + key + "'");
    }
  }
  ensure_disc();
  VVForm f{disc, weight, rep, prec, std::move(comps)};
  return f;
}

void write_vvform(std::ostream& os, const VVForm& f) {
  os << "gram\n";
  write_matrix(os, f.disc->lattice().gram());
  os << "weight " << f.weight << "\nrep " << rep_name(f.rep) << "\nprec " << f.prec << '\n';
  for (std::size_t x = 0; x < f.components.size(); ++x) {
    if (f.components[x].is_zero()) continue;
    os << "coset";
    for (const auto& c : f.disc->element(x).coords) os << ' ' << c;
    os << '\n';
    for (const auto& [e, c] : f.components[x].items()) os << e << ' ' << c << '\n';
  }
}

ScalarForm read_scalar_form(std::istream& is) {
  Lines in{is};
  std::vector<std::string> t;
  ScalarForm s;
  bool have_prec = false;
  Frac prec;
  std::vector<std::pair<Frac, Frac>> terms;
  while (in.next(t)) {
    if (t.size() != 2) in.fail("expected two fields");
    if (t[0] == "p") {
      s.p = parse_int(t[1]);
    } else if (t[0] == "weight") {
      s.weight = Frac::parse(t[1]);
    } else if (t[0] == "prec") {
      prec = Frac::parse(t[1]);
      have_prec = true;
    } else {
      terms.emplace_back(Frac::parse(t[0]), Frac::parse(t[1]));
    }
  }
  if (s.p == 0 || !have_prec) throw std::invalid_argument("scalar form needs 'p' and 'prec'");
  s.series = FracSeries(prec, terms);
  return s;
}

VVForm read_vvform_file(const std::filesystem::path& path) {
  auto in = open(path);
  try {
    return read_vvform(in);
  } catch (const std::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

ScalarForm read_scalar_form_file(const std::filesystem::path& path) {
  auto in = open(path);
  try {
    return read_scalar_form(in);
  } catch (const std::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

std::string series_str(const FracSeries& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : f.items()) {
    std::string term;
    const bool neg = c.sign() < 0;
    const Frac a = neg ? -c : c;
    if (e.is_zero()) {
      term = a.str();
    } else {
      if (a != Frac(1)) term = a.str() + "*";
      term += "q";
      if (e != Frac(1)) term += "^" + e.str();
    }
    if (s.empty()) {
      s = (neg ? "-" : "") + term;
    } else {
      s += (neg ? " - " : " + ") + term;
    }
  }
  return s;
}

}  // namespace vvmf
