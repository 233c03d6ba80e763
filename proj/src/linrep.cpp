#include "mcgcert/linrep.hpp"

#include <array>
#include <stdexcept>

namespace mcgcert {

namespace {

LaurentPoly mono(int dq, int dt, long long c) {
  return LaurentPoly::monomial(dq, dt, Coef(c));
}

LaurentPoly from_terms(std::initializer_list<std::array<long long, 3>> ts) {
  LaurentPoly p;
  for (const auto& t : ts)
    p += mono(static_cast<int>(t[0]), static_cast<int>(t[1]), t[2]);
  return p;
}

void check_braid_pairs(const Representation& rep,
                       const std::vector<std::pair<int, int>>& braided) {
  const int r = static_cast<int>(rep.gens.size());
  auto img = [&](int i) -> const PolyMatrix& { return rep.image.at(rep.gens[i]); };
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      bool adj = false;
      for (auto [a, b] : braided)
        if ((a == i && b == j) || (a == j && b == i)) adj = true;
      PolyMatrix lhs, rhs;
      if (adj) {
        lhs = img(i) * img(j) * img(i);
        rhs = img(j) * img(i) * img(j);
      } else {
        lhs = img(i) * img(j);
        rhs = img(j) * img(i);
      }
      if (!(lhs == rhs))
        throw std::runtime_error("representation violates relation between " +
                                 rep.gens[i] + " and " + rep.gens[j]);
    }
  for (const std::string& g : rep.gens) {
    if (!(rep.image.at(g) * rep.inverse_image.at(g)).is_identity())
      throw std::runtime_error("inverse image check failed for " + g);
  }
}

}  // namespace

const PolyMatrix& Representation::of(const Letter& l) const {
  const auto& table = l.sign > 0 ? image : inverse_image;
  auto it = table.find(l.gen);
  if (it == table.end())
    throw std::runtime_error("no image for generator " + l.gen);
  return it->second;
}

PolyMatrix inverse_from_cubic(const PolyMatrix& m) {
  // M^-1 = (M^2 + (q - 1 + t q^2) M + (t q^3 - t q^2 - q) I) / (t q^3)
  LaurentPoly a = from_terms({{1, 0, 1}, {0, 0, -1}, {2, 1, 1}});
  LaurentPoly b = from_terms({{3, 1, 1}, {2, 1, -1}, {1, 0, -1}});
  PolyMatrix num = m * m + m.scaled(a) + PolyMatrix::identity(m.dim()).scaled(b);
  return num.shifted_scalar(-3, -1, 1);
}

Representation lk_representation(int n, std::vector<std::string> names) {
  if (n < 2 || n > 5) throw std::runtime_error("strand count out of range");
  if (names.empty())
    for (int i = 1; i < n; ++i) names.push_back("s" + std::to_string(i));
  if (static_cast<int>(names.size()) != n - 1)
    throw std::runtime_error("need n-1 generator names");

  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) pairs.emplace_back(j, k);
  auto idx = [&](int j, int k) {
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (pairs[p] == std::make_pair(j, k)) return static_cast<int>(p);
    throw std::logic_error("bad pair");
  };

  Representation rep;
  rep.convention = "lk/bigelow-colwise";
  rep.dim = static_cast<int>(pairs.size());
  rep.gens = names;
  for (auto [j, k] : pairs)
    rep.basis_labels.push_back("v" + std::to_string(j) + std::to_string(k));

  for (int i = 1; i < n; ++i) {
    PolyMatrix m(rep.dim);
    for (auto [j, k] : pairs) {
      int col = idx(j, k);
      if (i == j - 1 && i != k - 1) {
        m.at(idx(i, k), col) = mono(1, 0, 1);
        m.at(idx(i, j), col) = from_terms({{2, 0, 1}, {1, 0, -1}});
        m.at(col, col) = from_terms({{0, 0, 1}, {1, 0, -1}});
      } else if (i == j && i != k - 1) {
        m.at(idx(j + 1, k), col) = LaurentPoly::one();
      } else if (i == k - 1 && i != j) {
        m.at(idx(j, i), col) = mono(1, 0, 1);
        m.at(col, col) = from_terms({{0, 0, 1}, {1, 0, -1}});
        m.at(idx(i, k), col) = from_terms({{2, 1, -1}, {1, 1, 1}});
      } else if (i == k) {
        m.at(idx(j, k + 1), col) = LaurentPoly::one();
      } else if (i == j && i == k - 1) {
        m.at(col, col) = mono(2, 1, -1);
      } else {
        m.at(col, col) = LaurentPoly::one();
      }
    }
    rep.image[names[static_cast<std::size_t>(i) - 1]] = m;
    rep.inverse_image[names[static_cast<std::size_t>(i) - 1]] = inverse_from_cubic(m);
  }

  std::vector<std::pair<int, int>> braided;
  for (int i = 0; i + 1 < n - 1; ++i) braided.emplace_back(i, i + 1);
  check_braid_pairs(rep, braided);
  return rep;
}

Representation cw_representation_d4(std::vector<std::string> names) {
  if (names.empty()) names = {"a1", "a2", "a3", "b"};
  if (names.size() != 4) throw std::runtime_error("need 4 generator names");

  using Root = std::array<int, 4>;
  auto minus = [](int i, int j) {
    Root r{};
    r[i - 1] = 1;
    r[j - 1] = -1;
    return r;
  };
  auto plus = [](int i, int j) {
    Root r{};
    r[i - 1] = 1;
    r[j - 1] = 1;
    return r;
  };
  std::vector<Root> basis;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) basis.push_back(minus(i, j));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) basis.push_back(plus(i, j));
  auto idx = [&](const Root& r) {
    for (std::size_t p = 0; p < basis.size(); ++p)
      if (basis[p] == r) return static_cast<int>(p);
    throw std::logic_error("root not in basis");
  };
  auto ip = [](const Root& x, const Root& y) {
    int s = 0;
    for (int i = 0; i < 4; ++i) s += x[i] * y[i];
    return s;
  };
  auto add = [](const Root& x, const Root& y) {
    Root r{};
    for (int i = 0; i < 4; ++i) r[i] = x[i] + y[i];
    return r;
  };
  auto sub = [](const Root& x, const Root& y) {
    Root r{};
    for (int i = 0; i < 4; ++i) r[i] = x[i] - y[i];
    return r;
  };

  // simple roots in generator order (a1, a2, a3, b)
  std::array<Root, 4> simple{minus(1, 2), minus(3, 4), plus(3, 4), minus(2, 3)};
  const Root highest = plus(1, 2);

  // expansion coefficient of a simple root inside a positive root, by Cramer
  auto det4 = [](const std::array<Root, 4>& cols) {
    // expand along the first row of the column matrix
    auto det3 = [](long long m[3][3]) {
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    long long d = 0;
    for (int c = 0; c < 4; ++c) {
      long long sub3[3][3];
      for (int i = 1; i < 4; ++i) {
        int cc = 0;
        for (int j = 0; j < 4; ++j) {
          if (j == c) continue;
          sub3[i - 1][cc++] = cols[j][i];
        }
      }
      long long term = cols[c][0] * det3(sub3);
      d += (c % 2 == 0 ? term : -term);
    }
    return d;
  };
  long long den = det4(simple);
  auto coeff_of = [&](int which_simple, const Root& beta) {
    std::array<Root, 4> cols = simple;
    cols[which_simple] = beta;
    long long num = det4(cols);
    if (num % den != 0) throw std::logic_error("non-integral root expansion");
    return num / den;
  };

  const LaurentPoly O = from_terms({{1, 1, 1}, {2, 1, -1}});
  const LaurentPoly W_LEAF =
      from_terms({{-1, 1, -1}, {0, 1, 1}, {1, 1, 1}, {2, 1, -1}});
  const LaurentPoly W_B = from_terms({{0, 1, -1}, {1, 1, 2}, {2, 1, -1}});
  const LaurentPoly N_B =
      from_terms({{-1, 1, 1}, {0, 1, -3}, {1, 1, 3}, {2, 1, -1}});

  Representation rep;
  rep.convention = "krammer-type-d4/lo-up-gauge-q";
  rep.dim = 12;
  rep.gens = names;
  for (const Root& r : basis) {
    std::string lab = "x";
    for (int i = 0; i < 4; ++i) {
      if (r[i] == 1) lab += "+" + std::to_string(i + 1);
      if (r[i] == -1) lab += "-" + std::to_string(i + 1);
    }
    rep.basis_labels.push_back(lab);
  }

  for (int gi = 0; gi < 4; ++gi) {
    const std::string& gname = names[static_cast<std::size_t>(gi)];
    const bool is_center = gi == 3;
    const Root alpha = simple[gi];
    const int ia = idx(alpha);
    PolyMatrix m(12);
    for (int ib = 0; ib < 12; ++ib) {
      const Root& beta = basis[static_cast<std::size_t>(ib)];
      if (beta == alpha) {
        m.at(ia, ib) = mono(2, 1, -1);
        continue;
      }
      int p = ip(alpha, beta);
      if (p == 0) {
        m.at(ib, ib) = LaurentPoly::one();
        if (coeff_of(gi, beta) != 0) m.at(ia, ib) = is_center ? W_B : W_LEAF;
      } else if (p < 0) {
        Root up = add(beta, alpha);
        m.at(idx(up), ib) = mono(1, 0, 1);
        m.at(ib, ib) = from_terms({{0, 0, 1}, {1, 0, -1}});
        if (is_center && up == highest) m.at(ia, ib) = N_B;
      } else {
        Root lo = sub(beta, alpha);
        m.at(idx(lo), ib) = LaurentPoly::one();
        m.at(ia, ib) = O;
      }
    }
    rep.image[gname] = m;
    rep.inverse_image[gname] = inverse_from_cubic(m);
  }

  // star relations: each of a1, a2, a3 braids with b, leaves commute
  check_braid_pairs(rep, {{0, 3}, {1, 3}, {2, 3}});
  return rep;
}

Representation free_abelian_representation(const std::vector<std::string>& names) {
  Representation rep;
  rep.convention = "diag-q";
  rep.dim = static_cast<int>(names.size());
  rep.gens = names;
  for (std::size_t i = 0; i < names.size(); ++i) {
    rep.basis_labels.push_back("z" + std::to_string(i + 1));
    PolyMatrix m = PolyMatrix::identity(rep.dim);
    PolyMatrix mi = m;
    m.at(static_cast<int>(i), static_cast<int>(i)) = mono(1, 0, 1);
    mi.at(static_cast<int>(i), static_cast<int>(i)) = mono(-1, 0, 1);
    rep.image[names[i]] = m;
    rep.inverse_image[names[i]] = mi;
  }
  return rep;
}

Representation rep_direct_sum(const Representation& a, const Representation& b) {
  for (const std::string& g : b.gens)
    if (a.image.count(g))
      throw std::runtime_error("rep_direct_sum: alphabets overlap at " + g);
  Representation rep;
  rep.convention = a.convention + "+" + b.convention;
  rep.dim = a.dim + b.dim;
  rep.gens = a.gens;
  rep.gens.insert(rep.gens.end(), b.gens.begin(), b.gens.end());
  rep.basis_labels = a.basis_labels;
  rep.basis_labels.insert(rep.basis_labels.end(), b.basis_labels.begin(),
                          b.basis_labels.end());
  PolyMatrix ia = PolyMatrix::identity(a.dim);
  PolyMatrix ib = PolyMatrix::identity(b.dim);
  for (const std::string& g : a.gens) {
    rep.image[g] = PolyMatrix::direct_sum(a.image.at(g), ib);
    rep.inverse_image[g] = PolyMatrix::direct_sum(a.inverse_image.at(g), ib);
  }
  for (const std::string& g : b.gens) {
    rep.image[g] = PolyMatrix::direct_sum(ia, b.image.at(g));
    rep.inverse_image[g] = PolyMatrix::direct_sum(ia, b.inverse_image.at(g));
  }
  return rep;
}

PolyMatrix evaluate_word_matrix(const Representation& rep, const Word& w) {
  PolyMatrix acc = PolyMatrix::identity(rep.dim);
  for (const Letter& l : w) acc = acc * rep.of(l);
  return acc;
}

}  // namespace mcgcert
