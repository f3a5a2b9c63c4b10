#include "hf/seifert.hpp"

#include <sstream>

namespace hf {

Int arm_product(const SeifertData& s) {
  Int prod = 1;
  for (const auto& arm : s.arms) prod *= arm.a;
  return prod;
}

static void check_structure(const SeifertData& s) {
  for (const auto& arm : s.arms) {
    if (arm.a < 2)
      throw MalformedInput("seifert arm multiplicity must be >= 2, got " + arm.a.get_str());
    if (!(arm.b > 0 && arm.b < arm.a))
      throw MalformedInput("seifert arm coefficient out of range: " + arm.b.get_str() + "/" +
                           arm.a.get_str());
  }
}

bool validate(const SeifertData& s) {
  check_structure(s);
  const Int A = arm_product(s);
  Int lhs = s.e0 * A;
  for (const auto& arm : s.arms) lhs += arm.b * (A / arm.a);
  if (lhs != -1) return false;
  return orbifold_euler(s) < 0;
}

Rat orbifold_euler(const SeifertData& s) {
  Rat e(s.e0);
  for (const auto& arm : s.arms) e += make_rat(arm.b, arm.a);
  return e;
}

Rat orbifold_epsilon(const SeifertData& s) {
  Rat num(2 - static_cast<long>(s.arms.size()));
  for (const auto& arm : s.arms) num += make_rat(1, arm.a);
  return num / orbifold_euler(s);
}

SeifertData brieskorn(const Int& a1, const Int& a2, const Int& a3) {
  const std::array<Int, 3> a{a1, a2, a3};
  for (const Int& ai : a)
    if (ai < 2) throw InvalidArgs("brieskorn: parameters must be >= 2, got " + ai.get_str());
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (gcd(a[i], a[j]) != 1)
        throw NotCoprime("brieskorn: gcd(" + a[i].get_str() + ", " + a[j].get_str() + ") != 1");

  const Int A = a1 * a2 * a3;
  SeifertData s;
  Int acc = 0;
  for (const Int& ai : a) {
    const Int Ahat = A / ai;
    // b * Ahat = -1 (mod a_i), normalized into (0, a_i).
    Int b = (ai - mod_inverse(Ahat, ai)) % ai;
    if (b == 0) b = ai;  // unreachable for a_i >= 2, kept as a guard
    s.arms.push_back({ai, b});
    acc += b * Ahat;
  }
  s.e0 = (-1 - acc) / A;  // exact by construction of the b_i
  return s;
}

std::array<Int, 3> surgery_target(const Int& p, const Int& q, const Int& n, SurgerySign sign) {
  if (p < 2 || q < 2) throw InvalidArgs("surgery_target: need p, q >= 2");
  if (n < 1) throw InvalidArgs("surgery_target: need n >= 1");
  if (gcd(p, q) != 1)
    throw NotCoprime("surgery_target: gcd(" + p.get_str() + ", " + q.get_str() + ") != 1");
  const Int third = sign == SurgerySign::PlusOneOverN ? Int(p * q * n - 1) : Int(p * q * n + 1);
  return {p, q, third};
}

static std::vector<std::string> tokenize(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

static Int parse_int(const std::string& tok) {
  try {
    return Int(tok);
  } catch (const std::invalid_argument&) {
    throw MalformedInput("not an integer: '" + tok + "'");
  }
}

SeifertData parse_seifert(const std::string& text) {
  const std::vector<std::string> tokens = tokenize(text);
  if (tokens.empty()) throw MalformedInput("empty manifold description");

  if (tokens[0] == "brieskorn") {
    if (tokens.size() != 4)
      throw MalformedInput("expected 'brieskorn a1 a2 a3', got " +
                           std::to_string(tokens.size() - 1) + " parameter(s)");
    return brieskorn(parse_int(tokens[1]), parse_int(tokens[2]), parse_int(tokens[3]));
  }

  SeifertData s;
  bool have_e0 = false, have_arms = false;
  for (const std::string& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw MalformedInput("expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
    if (key == "e0") {
      s.e0 = parse_int(value);
      have_e0 = true;
    } else if (key == "arms") {
      std::istringstream arms(value);
      std::string pair;
      while (std::getline(arms, pair, ',')) {
        const auto slash = pair.find('/');
        if (slash == std::string::npos)
          throw MalformedInput("expected a/b arm, got '" + pair + "'");
        s.arms.push_back({parse_int(pair.substr(0, slash)), parse_int(pair.substr(slash + 1))});
      }
      have_arms = true;
    } else {
      throw MalformedInput("unknown key '" + key + "'");
    }
  }
  if (!have_e0 || !have_arms) throw MalformedInput("need both e0=... and arms=...");
  if (s.arms.empty()) throw MalformedInput("need at least one arm");
  check_structure(s);
  return s;
}

std::string seifert_to_text(const SeifertData& s) {
  std::string out = "e0=" + s.e0.get_str() + " arms=";
  for (std::size_t i = 0; i < s.arms.size(); ++i) {
    if (i) out += ",";
    out += s.arms[i].a.get_str() + "/" + s.arms[i].b.get_str();
  }
  return out;
}

std::string manifold_label(const SeifertData& s) {
  if (s.arms.size() == 3)
    return "-Sigma(" + s.arms[0].a.get_str() + "," + s.arms[1].a.get_str() + "," +
           s.arms[2].a.get_str() + ")";
  std::string out = "-Sigma(e0=" + s.e0.get_str() + "; arms=";
  for (std::size_t i = 0; i < s.arms.size(); ++i) {
    if (i) out += ",";
    out += s.arms[i].a.get_str() + "/" + s.arms[i].b.get_str();
  }
  return out + ")";
}

}  // namespace hf
