#include "mcgcert/mcg.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "mcgcert/garside.hpp"

namespace mcgcert {

namespace {

Word gen(const std::string& name) { return Word{{name, 1}}; }

Word braid_relator(const std::string& x, const std::string& y) {
  // x y x = y x y
  return free_reduce(concat(parse_word(x + " " + y + " " + x),
                            inverse(parse_word(y + " " + x + " " + y))));
}

std::string aname(int i) { return "a" + std::to_string(i); }
std::string cname(int i, int j) {
  return "c" + std::to_string(i) + std::to_string(j);
}

}  // namespace

std::string SurfaceTriple::str() const {
  return "(" + std::to_string(g) + "," + std::to_string(b) + "," +
         std::to_string(n) + ")";
}

std::vector<std::array<int, 3>> good_triples(int k) {
  if (k != 3) throw std::runtime_error("good_triples: only k = 3 is supported");
  std::vector<std::array<int, 3>> out;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j)
      for (int l = j + 1; l <= k; ++l) out.push_back({i, j, l});
  return out;
}

Word delta_ij_squared(int i, int j) {
  return power(parse_word(aname(i) + " b " + aname(j)), 4);
}

Word delta_123() { return power(parse_word("a1 a2 a3 b"), 3); }

GervaisData gervais_presentation(const SurfaceTriple& t) {
  GervaisData gd;
  Presentation p;
  if (t == SurfaceTriple{1, 3, 0}) {
    p.gens = {"b",   "a1",  "a2",  "a3",  "c12",
              "c21", "c13", "c31", "c23", "c32"};
    const std::vector<std::string> cs = {"c12", "c21", "c13", "c31", "c23", "c32"};
    const std::set<std::string> c_sociable = {"c12", "c23", "c31"};
    const std::map<std::string, std::string> exception = {
        {"a1", "c32"}, {"a2", "c13"}, {"a3", "c21"}};
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j)
        p.relators.push_back(commutator(gen(aname(i)), gen(aname(j))));
    for (int i = 1; i <= 3; ++i)
      for (const std::string& c : cs)
        if (exception.at(aname(i)) != c)
          p.relators.push_back(commutator(gen(aname(i)), gen(c)));
    for (const std::string& c : cs)
      p.relators.push_back(commutator(gen("b"), gen(c)));
    for (std::size_t x = 0; x < cs.size(); ++x)
      for (std::size_t y = x + 1; y < cs.size(); ++y)
        if (c_sociable.count(cs[x]) || c_sociable.count(cs[y]))
          p.relators.push_back(commutator(gen(cs[x]), gen(cs[y])));
    for (int i = 1; i <= 3; ++i) p.relators.push_back(braid_relator(aname(i), "b"));
    for (const auto& tri : good_triples(3)) {
      auto [i, j, k] = tri;
      Word lhs, rhs;
      if (i == j) {
        lhs = concat(gen(cname(i, k)), gen(cname(k, i)));
        rhs = delta_ij_squared(i, k);
      } else {
        lhs = concat(concat(gen(cname(i, j)), gen(cname(j, k))), gen(cname(k, i)));
        rhs = delta_123();
      }
      p.relators.push_back(concat(lhs, inverse(rhs)));
    }
    gd.boundary_caps = {"c31", "c23", "c12"};
  } else if (t == SurfaceTriple{1, 2, 0}) {
    p.gens = {"b", "a1", "a2", "c12", "c21"};
    p.relators.push_back(commutator(gen("a1"), gen("a2")));
    for (const std::string& a : {"a1", "a2", "b"})
      for (const std::string& c : {"c12", "c21"})
        p.relators.push_back(commutator(gen(a), gen(c)));
    p.relators.push_back(commutator(gen("c12"), gen("c21")));
    p.relators.push_back(braid_relator("a1", "b"));
    p.relators.push_back(braid_relator("a2", "b"));
    p.relators.push_back(concat(concat(gen("c12"), gen("c21")),
                                inverse(delta_ij_squared(1, 2))));
    gd.boundary_caps = {"c21", "c12"};
  } else {
    throw std::runtime_error("gervais_presentation: unsupported triple " + t.str());
  }
  gd.presentation = normalize_relators(p);
  for (const std::string& g : p.gens) {
    if (g == "b")
      gd.curve_roles[g] = CurveRole::CentralB;
    else if (g[0] == 'a')
      gd.curve_roles[g] = CurveRole::HandleA;
    else
      gd.curve_roles[g] = CurveRole::BoundaryC;
  }
  return gd;
}

Presentation cap_boundary(const Presentation& p, const std::string& c) {
  return quotient_by_words(p, {gen(c)});
}

namespace {

std::string pb_name(int i, int j) {
  return "A" + std::to_string(i) + std::to_string(j);
}

Word band_word(int i, int j) {
  Word w;
  for (int m = j - 1; m > i; --m) w.push_back({"s" + std::to_string(m), 1});
  w.push_back({"s" + std::to_string(i), 1});
  w.push_back({"s" + std::to_string(i), 1});
  for (int m = i + 1; m < j; ++m) w.push_back({"s" + std::to_string(m), -1});
  return w;
}

// Conjugator in the relator Ars^-1 Aij Ars = C Aij C^-1, for (r,s) before
// (i,j) in lex order.
Word pb_conjugator(int r, int s, int i, int j) {
  if (s < i || (r < i && j < s)) return {};
  if (r == i && s < j) return concat(gen(pb_name(i, j)), gen(pb_name(s, j)));
  if (r < i && s == i) return gen(pb_name(r, j));
  if (r < i && s == j) return concat(gen(pb_name(i, j)), gen(pb_name(r, i)));
  if (r < i && i < s && s < j)
    return commutator(gen(pb_name(r, j)), gen(pb_name(s, j)));
  throw std::logic_error("unreachable pure braid pattern");
}

}  // namespace

PureBraidData pure_braid_presentation(int k) {
  if (k < 1) throw std::runtime_error("pure_braid_presentation: k < 1");
  static std::mutex mu;
  static std::map<int, PureBraidData> cache;
  {
    std::scoped_lock lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  PureBraidData pb;
  pb.strands = k;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) pairs.emplace_back(i, j);
  for (auto [i, j] : pairs) {
    pb.presentation.gens.push_back(pb_name(i, j));
    pb.embedding[pb_name(i, j)] = band_word(i, j);
  }
  for (std::size_t x = 0; x < pairs.size(); ++x)
    for (std::size_t y = x + 1; y < pairs.size(); ++y) {
      auto [r, s] = pairs[x];
      auto [i, j] = pairs[y];
      Word c = pb_conjugator(r, s, i, j);
      Word lhs = concat(concat(inverse(gen(pb_name(r, s))), gen(pb_name(i, j))),
                        gen(pb_name(r, s)));
      Word rhs = concat(concat(c, gen(pb_name(i, j))), inverse(c));
      pb.presentation.relators.push_back(free_reduce(concat(lhs, inverse(rhs))));
    }
  pb.presentation = normalize_relators(pb.presentation);

  // transcription gate: every relator must embed to a Garside-trivial word
  if (k >= 2) {
    CoxeterSystem cox = CoxeterSystem::type_a(k);
    std::unordered_map<std::string, Word> emb(pb.embedding.begin(),
                                              pb.embedding.end());
    for (const Word& r : pb.presentation.relators) {
      GarsideElement nf = normal_form(cox, apply_map(r, emb));
      if (nf.inf != 0 || !nf.factors.empty())
        throw std::runtime_error("pure braid relator fails the embedding check");
    }
  }
  std::scoped_lock lock(mu);
  cache.emplace(k, pb);
  return pb;
}

Word full_twist_word(int k) {
  Word w;
  for (int j = 2; j <= k; ++j)
    for (int i = 1; i < j; ++i) w.push_back({pb_name(i, j), 1});
  return w;
}

// ---------------------------------------------------------------------------

GroupExprPtr GroupExpr::artin_a(int n, std::vector<std::string> names) {
  if (n < 2 || n > 8) throw std::runtime_error("artin_a: strand count out of range");
  if (names.empty())
    for (int i = 1; i < n; ++i) names.push_back("s" + std::to_string(i));
  if (static_cast<int>(names.size()) != n - 1)
    throw std::runtime_error("artin_a: need n-1 names");
  auto e = std::make_shared<GroupExpr>();
  e->kind = Kind::ArtinA;
  e->param = n;
  e->names = std::move(names);
  return e;
}

GroupExprPtr GroupExpr::artin_d4(std::vector<std::string> names) {
  if (names.empty()) names = {"a1", "a2", "a3", "b"};
  if (names.size() != 4) throw std::runtime_error("artin_d4: need 4 names");
  auto e = std::make_shared<GroupExpr>();
  e->kind = Kind::ArtinD4;
  e->param = 4;
  e->names = std::move(names);
  return e;
}

GroupExprPtr GroupExpr::free_abelian(std::vector<std::string> names) {
  auto e = std::make_shared<GroupExpr>();
  e->kind = Kind::FreeAbelian;
  e->param = static_cast<int>(names.size());
  e->names = std::move(names);
  return e;
}

GroupExprPtr GroupExpr::pure_braid(int k) {
  if (k < 1) throw std::runtime_error("pure_braid: k < 1");
  auto e = std::make_shared<GroupExpr>();
  e->kind = Kind::PureBraid;
  e->param = k;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) e->names.push_back(pb_name(i, j));
  return e;
}

GroupExprPtr GroupExpr::product(std::vector<GroupExprPtr> parts) {
  auto e = std::make_shared<GroupExpr>();
  e->kind = Kind::Product;
  std::set<std::string> seen;
  for (const auto& part : parts) {
    GroupOracle sub(part);
    for (const std::string& gname : sub.alphabet())
      if (!seen.insert(gname).second)
        throw std::runtime_error("product: overlapping generator " + gname);
  }
  e->children = std::move(parts);
  return e;
}

GroupExprPtr GroupExpr::central_quotient(GroupExprPtr child, Word z) {
  GroupOracle sub(child);
  for (const std::string& gname : sub.alphabet()) {
    Word g = gen(gname);
    if (!sub.is_trivial(free_reduce(concat(concat(g, z), inverse(concat(z, g))))))
      throw std::runtime_error("central_quotient: word is not central (fails at " +
                               gname + ")");
  }
  auto e = std::make_shared<GroupExpr>();
  e->kind = Kind::CentralQuotient;
  e->children = {std::move(child)};
  e->center = std::move(z);
  return e;
}

std::string render_group(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::ArtinA:
      return "B" + std::to_string(e.param);
    case GroupExpr::Kind::ArtinD4:
      return "A(D4)";
    case GroupExpr::Kind::FreeAbelian:
      return e.param == 1 ? "Z" : "Z^" + std::to_string(e.param);
    case GroupExpr::Kind::PureBraid:
      return "PB" + std::to_string(e.param);
    case GroupExpr::Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += " x ";
        out += render_group(*e.children[i]);
      }
      return out;
    }
    case GroupExpr::Kind::CentralQuotient: {
      const GroupExpr& c = *e.children[0];
      std::string base = render_group(c);
      if (c.kind == GroupExpr::Kind::ArtinA || c.kind == GroupExpr::Kind::ArtinD4)
        return base + "/Z(" + base + ")";
      if (c.kind == GroupExpr::Kind::PureBraid) return base + "/Z";
      return "(" + base + ")/<center>";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------

struct GroupOracle::Impl {
  std::unique_ptr<CoxeterSystem> cox;
  std::unordered_map<std::string, Word> embed;       // PureBraid
  std::vector<std::unique_ptr<GroupOracle>> parts;   // Product
  std::unordered_map<std::string, std::size_t> owner;
  std::unique_ptr<GroupOracle> inner;                // CentralQuotient
};

GroupOracle::~GroupOracle() = default;
GroupOracle::GroupOracle(GroupOracle&&) noexcept = default;

GroupOracle::GroupOracle(GroupExprPtr e) : expr_(std::move(e)), impl_(new Impl) {
  const GroupExpr& x = *expr_;
  switch (x.kind) {
    case GroupExpr::Kind::ArtinA:
      impl_->cox =
          std::make_unique<CoxeterSystem>(CoxeterSystem::type_a(x.param, x.names));
      alphabet_ = x.names;
      break;
    case GroupExpr::Kind::ArtinD4:
      impl_->cox =
          std::make_unique<CoxeterSystem>(CoxeterSystem::type_d4(x.names));
      alphabet_ = x.names;
      break;
    case GroupExpr::Kind::FreeAbelian:
      alphabet_ = x.names;
      break;
    case GroupExpr::Kind::PureBraid: {
      alphabet_ = x.names;
      if (x.param >= 2) {
        impl_->cox =
            std::make_unique<CoxeterSystem>(CoxeterSystem::type_a(x.param));
        PureBraidData pb = pure_braid_presentation(x.param);
        impl_->embed.insert(pb.embedding.begin(), pb.embedding.end());
      }
      break;
    }
    case GroupExpr::Kind::Product:
      for (const auto& c : x.children) {
        auto sub = std::make_unique<GroupOracle>(c);
        for (const std::string& gname : sub->alphabet()) {
          impl_->owner[gname] = impl_->parts.size();
          alphabet_.push_back(gname);
        }
        impl_->parts.push_back(std::move(sub));
      }
      break;
    case GroupExpr::Kind::CentralQuotient:
      impl_->inner = std::make_unique<GroupOracle>(x.children[0]);
      alphabet_ = impl_->inner->alphabet();
      break;
  }
}

bool GroupOracle::owns(const std::string& g) const {
  return std::find(alphabet_.begin(), alphabet_.end(), g) != alphabet_.end();
}

namespace {

bool artin_trivial(const CoxeterSystem& cox, const Word& w) {
  GarsideElement nf = normal_form(cox, w);
  return nf.inf == 0 && nf.factors.empty();
}

std::unordered_map<std::string, long long> exponent_vector(const Word& w) {
  std::unordered_map<std::string, long long> v;
  for (const Letter& l : w) v[l.gen] += l.sign;
  std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
  return v;
}

}  // namespace

bool GroupOracle::is_trivial(const Word& w) const {
  for (const Letter& l : w)
    if (!owns(l.gen))
      throw std::runtime_error("word uses generator " + l.gen +
                               " outside the group alphabet");
  const GroupExpr& x = *expr_;
  switch (x.kind) {
    case GroupExpr::Kind::ArtinA:
    case GroupExpr::Kind::ArtinD4:
      return artin_trivial(*impl_->cox, w);
    case GroupExpr::Kind::FreeAbelian:
      return exponent_vector(w).empty();
    case GroupExpr::Kind::PureBraid: {
      if (x.param < 2) return true;
      return artin_trivial(*impl_->cox, apply_map(w, impl_->embed));
    }
    case GroupExpr::Kind::Product: {
      std::vector<Word> comp(impl_->parts.size());
      for (const Letter& l : w) comp[impl_->owner.at(l.gen)].push_back(l);
      for (std::size_t i = 0; i < comp.size(); ++i)
        if (!impl_->parts[i]->is_trivial(comp[i])) return false;
      return true;
    }
    case GroupExpr::Kind::CentralQuotient: {
      const GroupOracle& g = *impl_->inner;
      const Word& z = x.center;
      if (g.is_trivial(z)) return g.is_trivial(w);

      // components of the child: either the child itself or its product parts
      struct Comp {
        const GroupOracle* oracle;
        Word wc, zc;
      };
      std::vector<Comp> comps;
      if (g.expr().kind == GroupExpr::Kind::Product) {
        const auto& gi = *g.impl_;
        std::vector<Word> wcs(gi.parts.size()), zcs(gi.parts.size());
        for (const Letter& l : w) wcs[gi.owner.at(l.gen)].push_back(l);
        for (const Letter& l : z) zcs[gi.owner.at(l.gen)].push_back(l);
        for (std::size_t i = 0; i < gi.parts.size(); ++i)
          comps.push_back({gi.parts[i].get(), wcs[i], zcs[i]});
      } else {
        comps.push_back({&g, w, z});
      }

      bool pinned = false;
      long long m = 0;
      for (const Comp& c : comps) {
        const GroupExpr& ce = c.oracle->expr();
        if (ce.kind == GroupExpr::Kind::FreeAbelian) {
          auto v = exponent_vector(c.zc);
          if (v.empty()) continue;
          auto u = exponent_vector(c.wc);
          auto [gname, zv] = *v.begin();
          long long uv = u.count(gname) ? u.at(gname) : 0;
          if (uv % zv != 0) return false;
          m = uv / zv;
          pinned = true;
          break;
        }
        if (ce.kind == GroupExpr::Kind::ArtinA ||
            ce.kind == GroupExpr::Kind::ArtinD4 ||
            ce.kind == GroupExpr::Kind::PureBraid) {
          const CoxeterSystem* cox = c.oracle->impl_->cox.get();
          if (!cox) continue;
          Word zw = c.zc, ww = c.wc;
          if (ce.kind == GroupExpr::Kind::PureBraid) {
            zw = apply_map(zw, c.oracle->impl_->embed);
            ww = apply_map(ww, c.oracle->impl_->embed);
          }
          auto dz = delta_power_of(*cox, zw);
          if (!dz || *dz == 0) continue;
          auto dw = delta_power_of(*cox, ww);
          if (!dw) return false;
          if (*dw % *dz != 0) return false;
          m = *dw / *dz;
          pinned = true;
          break;
        }
      }
      if (pinned) return g.is_trivial(free_reduce(concat(w, power(z, -m))));
      long long bound =
          static_cast<long long>(w.size()) /
              std::max<long long>(1, static_cast<long long>(z.size())) +
          1;
      for (long long k = -bound; k <= bound; ++k)
        if (g.is_trivial(free_reduce(concat(w, power(z, -k))))) return true;
      return false;
    }
  }
  throw std::logic_error("bad group expression");
}

bool GroupOracle::equal(const Word& u, const Word& v) const {
  return is_trivial(free_reduce(concat(u, inverse(v))));
}

Presentation GroupOracle::presentation() const {
  const GroupExpr& x = *expr_;
  switch (x.kind) {
    case GroupExpr::Kind::ArtinA: {
      Presentation p;
      p.gens = x.names;
      for (std::size_t i = 0; i < x.names.size(); ++i)
        for (std::size_t j = i + 1; j < x.names.size(); ++j)
          p.relators.push_back(j == i + 1
                                   ? braid_relator(x.names[i], x.names[j])
                                   : commutator(gen(x.names[i]), gen(x.names[j])));
      return normalize_relators(p);
    }
    case GroupExpr::Kind::ArtinD4: {
      Presentation p;
      p.gens = x.names;
      for (int i = 0; i < 3; ++i) {
        p.relators.push_back(braid_relator(x.names[i], x.names[3]));
        for (int j = i + 1; j < 3; ++j)
          p.relators.push_back(commutator(gen(x.names[i]), gen(x.names[j])));
      }
      return normalize_relators(p);
    }
    case GroupExpr::Kind::FreeAbelian: {
      Presentation p;
      p.gens = x.names;
      for (std::size_t i = 0; i < x.names.size(); ++i)
        for (std::size_t j = i + 1; j < x.names.size(); ++j)
          p.relators.push_back(commutator(gen(x.names[i]), gen(x.names[j])));
      return normalize_relators(p);
    }
    case GroupExpr::Kind::PureBraid:
      return pure_braid_presentation(x.param).presentation;
    case GroupExpr::Kind::Product: {
      Presentation p;
      bool first = true;
      for (const auto& part : impl_->parts) {
        if (first) {
          p = part->presentation();
          first = false;
        } else {
          p = direct_product(p, part->presentation());
        }
      }
      return normalize_relators(p);
    }
    case GroupExpr::Kind::CentralQuotient:
      return quotient_by_words(impl_->inner->presentation(), {x.center});
  }
  throw std::logic_error("bad group expression");
}

}  // namespace mcgcert
