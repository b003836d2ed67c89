#include "loopcalc/rewrite.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "loopcalc/error.hpp"

namespace loopcalc {

SummandKind summand_kind(const Expr& e) {
  if (e.is(Kind::Sphere)) return SummandKind::Sphere;
  if (e.is(Kind::Moore)) return SummandKind::Moore;
  return SummandKind::Residue;
}

bool summand_less(const Expr& a, const Expr& b) {
  auto key = [](const Expr& e) {
    const bool cell = !(summand_kind(e) == SummandKind::Residue);
    return std::make_tuple(connectivity(e), static_cast<int>(summand_kind(e)), cell ? e.dim() : 0,
                           e.is(Kind::Moore) ? e.prime() : 0, e.is(Kind::Moore) ? e.power() : 0);
  };
  auto ka = key(a);
  auto kb = key(b);
  if (ka != kb) return ka < kb;
  if (summand_kind(a) != SummandKind::Residue) return false;
  return render(a) < render(b);
}

Expr WedgeNormalForm::to_expr() const {
  if (summands.empty()) return Expr::point();
  if (summands.size() == 1) return summands.front();
  return Expr::wedge(summands);
}

bool is_suspension_like(const Expr& e) {
  switch (e.kind()) {
    case Kind::Sphere:
    case Kind::Moore:
    case Kind::Suspend: return true;
    case Kind::Wedge:
      return std::all_of(e.children().begin(), e.children().end(), [](const Expr& c) { return is_suspension_like(c); });
    case Kind::Smash:
      return std::any_of(e.children().begin(), e.children().end(), [](const Expr& c) { return is_suspension_like(c); });
    default: return false;
  }
}

namespace {

Expr wedge_of(std::vector<Expr> parts) {
  if (parts.empty()) return Expr::point();
  if (parts.size() == 1) return parts.front();
  return Expr::wedge(std::move(parts));
}

Expr smash_of(std::vector<Expr> parts) {
  if (parts.size() == 1) return parts.front();
  return Expr::smash(std::move(parts));
}

Expr smash_power(const Expr& x, int j) { return smash_of(std::vector<Expr>(static_cast<std::size_t>(j), x)); }

// X with ΣX structurally equal to a normal-form expression.
std::optional<Expr> desuspend(const Expr& e) {
  switch (e.kind()) {
    case Kind::Sphere:
      if (e.dim() >= 2) return Expr::sphere(e.dim() - 1);
      return std::nullopt;
    case Kind::Moore:
      if (e.dim() >= 3) return Expr::moore(e.dim() - 1, e.prime(), e.power());
      return std::nullopt;
    case Kind::Suspend: return Expr::suspend(e.child(), e.times() - 1);
    case Kind::Wedge: {
      std::vector<Expr> parts;
      for (const Expr& c : e.children()) {
        auto d = desuspend(c);
        if (!d) return std::nullopt;
        parts.push_back(*d);
      }
      return Expr::wedge(std::move(parts));
    }
    case Kind::Smash: {
      std::vector<Expr> parts = e.children();
      for (Expr& c : parts) {
        if (c.is(Kind::Moore) || c.is(Kind::Sphere) || c.is(Kind::Suspend)) {
          if (auto d = desuspend(c)) {
            c = *d;
            return Expr::smash(std::move(parts));
          }
        }
      }
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

// Whether Σ of a residue factor rewrites into something other than a
// suspension of itself.
bool splits_under_suspension(const Expr& e) {
  switch (e.kind()) {
    case Kind::Product:
    case Kind::HalfSmash: return true;
    case Kind::James: return e.stage() >= 2;
    case Kind::Loop: return desuspend(e.child()).has_value();
    case Kind::Smash:
      return std::any_of(e.children().begin(), e.children().end(),
                         [](const Expr& c) { return splits_under_suspension(c); });
    default: return false;
  }
}

struct Rewrite {
  const char* rule;
  Expr after;
};

class Normalizer {
 public:
  explicit Normalizer(std::vector<TraceStep>* log) : log_(log) {}

  bool truncated() const { return truncated_; }

  Expr run(const Expr& e, int cap) {
    Expr cur = e;
    if (cur.is(Kind::Loop) && connectivity(cur.child()) < 1)
      throw Error(ErrorCode::NotSimplyConnected, "loop on " + render(cur.child()));
    if (!cur.children().empty()) {
      const int child_cap = cur.is(Kind::Loop) ? cap + 1 : cap;
      std::vector<Expr> kids;
      kids.reserve(cur.children().size());
      bool changed = false;
      for (const Expr& c : cur.children()) {
        Expr n = run(c, child_cap);
        changed = changed || !(n == c);
        kids.push_back(std::move(n));
      }
      if (changed) cur = cur.with_children(std::move(kids));
    }
    std::optional<Rewrite> r = root_rule(cur, cap);
    if (!r) return cur;
    if (log_) log_->push_back({r->rule, cur, r->after});
    return run(r->after, cap);
  }

 private:
  bool keep(const Expr& term, int cap) {
    if (connectivity(term) < cap) return true;
    truncated_ = true;
    return false;
  }

  std::optional<Rewrite> root_rule(const Expr& e, int cap) {
    switch (e.kind()) {
      case Kind::Wedge: return wedge_rule(e, cap);
      case Kind::Suspend: return suspend_rule(e, cap);
      case Kind::Smash: return smash_rule(e, cap);
      case Kind::Product: return product_rule(e);
      case Kind::HalfSmash: return half_smash_rule(e);
      case Kind::Loop: return loop_rule(e);
      case Kind::James: return james_rule(e);
      default: return std::nullopt;
    }
  }

  std::optional<Rewrite> wedge_rule(const Expr& e, int cap) {
    std::vector<Expr> flat;
    for (const Expr& c : e.children()) {
      if (c.is(Kind::Wedge)) {
        for (const Expr& g : c.children())
          if (keep(g, cap)) flat.push_back(g);
      } else if (!c.is(Kind::Point) && keep(c, cap)) {
        flat.push_back(c);
      }
    }
    std::stable_sort(flat.begin(), flat.end(), summand_less);
    Expr result = wedge_of(std::move(flat));
    if (result == e) return std::nullopt;
    return Rewrite{"AC", result};
  }

  std::optional<Rewrite> suspend_rule(const Expr& e, int cap) {
    const Expr& x = e.child();
    const int t = e.times();
    switch (x.kind()) {
      case Kind::Point: return Rewrite{"R1", Expr::point()};
      case Kind::Suspend: return Rewrite{"R1", Expr::suspend(x.child(), x.times() + t)};
      case Kind::Sphere: return Rewrite{"R1", Expr::sphere(x.dim() + t)};
      case Kind::Moore: return Rewrite{"R1", Expr::moore(x.dim() + t, x.prime(), x.power())};
      case Kind::Wedge: {
        std::vector<Expr> parts;
        for (const Expr& c : x.children()) {
          Expr term = Expr::suspend(c, t);
          if (keep(term, cap)) parts.push_back(term);
        }
        return Rewrite{"R1", wedge_of(std::move(parts))};
      }
      case Kind::Product: {
        // Σ(A_1 × ... × A_n) ≃ ∨ over nonempty subsets S of Σ(∧_{i∈S} A_i)
        const auto& fs = x.children();
        std::vector<Expr> parts;
        const unsigned n = static_cast<unsigned>(fs.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
          std::vector<Expr> sub;
          for (unsigned i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(fs[i]);
          Expr term = Expr::suspend(smash_of(std::move(sub)), t);
          if (keep(term, cap)) parts.push_back(term);
        }
        return Rewrite{"R1", wedge_of(std::move(parts))};
      }
      case Kind::HalfSmash: {
        std::vector<Expr> parts;
        for (Expr term : {Expr::suspend(Expr::smash({x.child(0), x.child(1)}), t), Expr::suspend(x.child(1), t)})
          if (keep(term, cap)) parts.push_back(term);
        return Rewrite{"R1", wedge_of(std::move(parts))};
      }
      case Kind::James: {
        if (x.stage() < 2) return std::nullopt;
        std::vector<Expr> parts;
        for (int j = 1; j <= x.stage(); ++j) {
          Expr term = Expr::suspend(smash_power(x.child(), j), t);
          if (keep(term, cap)) parts.push_back(term);
        }
        return Rewrite{"R6", wedge_of(std::move(parts))};
      }
      case Kind::Loop: {
        auto y = desuspend(x.child());
        if (!y) return std::nullopt;
        // Σ^t ΩΣY ≃ ∨_{j>=1} Σ^t Y^∧j, infinite: always truncated
        std::vector<Expr> parts;
        for (int j = 1;; ++j) {
          Expr term = Expr::suspend(smash_power(*y, j), t);
          if (!keep(term, cap)) break;
          parts.push_back(term);
        }
        truncated_ = true;
        return Rewrite{"R5", wedge_of(std::move(parts))};
      }
      case Kind::Smash: {
        std::vector<Expr> fs = x.children();
        for (Expr& f : fs) {
          if (splits_under_suspension(f)) {
            f = Expr::suspend(f, t);
            return Rewrite{"R1", Expr::smash(std::move(fs))};
          }
        }
        for (Expr& f : fs) {
          if (f.is(Kind::Moore)) {
            f = Expr::moore(f.dim() + t, f.prime(), f.power());
            return Rewrite{"R1", Expr::smash(std::move(fs))};
          }
        }
        return std::nullopt;
      }
      default: return std::nullopt;
    }
  }

  std::optional<Rewrite> smash_rule(const Expr& e, int cap) {
    const auto& fs = e.children();
    if (fs.size() == 1) return Rewrite{"AC", fs.front()};
    for (const Expr& f : fs)
      if (f.is(Kind::Point)) return Rewrite{"R2", Expr::point()};

    if (std::any_of(fs.begin(), fs.end(), [](const Expr& f) { return f.is(Kind::Smash); })) {
      std::vector<Expr> flat;
      for (const Expr& f : fs) {
        if (f.is(Kind::Smash)) flat.insert(flat.end(), f.children().begin(), f.children().end());
        else flat.push_back(f);
      }
      return Rewrite{"AC", Expr::smash(std::move(flat))};
    }

    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (!fs[i].is(Kind::Wedge)) continue;
      std::vector<Expr> parts;
      for (const Expr& w : fs[i].children()) {
        std::vector<Expr> term = fs;
        term[i] = w;
        Expr s = Expr::smash(std::move(term));
        if (keep(s, cap)) parts.push_back(s);
      }
      return Rewrite{"R2-distribute", wedge_of(std::move(parts))};
    }

    // pull suspension coordinates out
    {
      int total = 0;
      std::vector<Expr> rest;
      for (const Expr& f : fs) {
        if (f.is(Kind::Suspend)) {
          total += f.times();
          rest.push_back(f.child());
        } else {
          rest.push_back(f);
        }
      }
      if (total > 0) return Rewrite{"R2", Expr::suspend(Expr::smash(std::move(rest)), total)};
    }

    // spheres: S^a ∧ S^b = S^{a+b}, S^a ∧ P^n = P^{n+a}, S^a ∧ R = Σ^a R
    {
      int degree = 0;
      std::vector<Expr> rest;
      for (const Expr& f : fs) {
        if (f.is(Kind::Sphere)) degree += f.dim();
        else rest.push_back(f);
      }
      if (degree > 0) {
        if (rest.empty()) return Rewrite{"R2", Expr::sphere(degree)};
        for (Expr& f : rest) {
          if (f.is(Kind::Moore)) {
            f = Expr::moore(f.dim() + degree, f.prime(), f.power());
            return Rewrite{"R2", smash_of(std::move(rest))};
          }
        }
        return Rewrite{"R2", Expr::suspend(smash_of(std::move(rest)), degree)};
      }
    }

    // P^s(p^r) ∧ P^t(p^r) ≃ P^{s+t}(p^r) ∨ P^{s+t-1}(p^r) for p^r != 2
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (!fs[i].is(Kind::Moore)) continue;
      for (std::size_t j = i + 1; j < fs.size(); ++j) {
        const Expr& a = fs[i];
        const Expr& b = fs[j];
        if (!b.is(Kind::Moore) || a.prime() != b.prime() || a.power() != b.power()) continue;
        if (a.prime() == 2 && a.power() == 1) continue;
        const int s = a.dim() + b.dim();
        std::vector<Expr> term;
        for (std::size_t k = 0; k < fs.size(); ++k) {
          if (k == i) term.push_back(Expr::wedge({Expr::moore(s, a.prime(), a.power()),
                                                  Expr::moore(s - 1, a.prime(), a.power())}));
          else if (k != j) term.push_back(fs[k]);
        }
        return Rewrite{"R2", smash_of(std::move(term))};
      }
    }

    // P^n ∧ R = P^2 ∧ Σ^{n-2} R when Σ R splits
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (!fs[i].is(Kind::Moore) || fs[i].dim() < 3) continue;
      for (std::size_t j = 0; j < fs.size(); ++j) {
        if (j == i || fs[j].is(Kind::Moore) || !splits_under_suspension(fs[j])) continue;
        std::vector<Expr> term = fs;
        term[i] = Expr::moore(2, fs[i].prime(), fs[i].power());
        term[j] = Expr::suspend(fs[j], fs[i].dim() - 2);
        return Rewrite{"R2", Expr::smash(std::move(term))};
      }
    }
    return std::nullopt;
  }

  static std::optional<Rewrite> product_rule(const Expr& e) {
    const auto& fs = e.children();
    if (fs.size() == 1) return Rewrite{"R3", fs.front()};
    bool change = false;
    std::vector<Expr> flat;
    for (const Expr& f : fs) {
      if (f.is(Kind::Point)) {
        change = true;
      } else if (f.is(Kind::Product)) {
        change = true;
        flat.insert(flat.end(), f.children().begin(), f.children().end());
      } else {
        flat.push_back(f);
      }
    }
    if (!change) return std::nullopt;
    if (flat.empty()) return Rewrite{"R3", Expr::point()};
    if (flat.size() == 1) return Rewrite{"R3", flat.front()};
    return Rewrite{"R3", Expr::product(std::move(flat))};
  }

  static std::optional<Rewrite> half_smash_rule(const Expr& e) {
    const Expr& a = e.child(0);
    const Expr& b = e.child(1);
    if (b.is(Kind::Point)) return Rewrite{"R4", Expr::point()};
    if (a.is(Kind::Point)) return Rewrite{"R4", b};
    if (is_suspension_like(b)) return Rewrite{"R4", Expr::wedge({Expr::smash({a, b}), b})};
    return std::nullopt;
  }

  static std::optional<Rewrite> loop_rule(const Expr& e) {
    const Expr& x = e.child();
    if (x.is(Kind::Point)) return Rewrite{"R5", Expr::point()};
    if (x.is(Kind::Product)) {
      std::vector<Expr> loops;
      for (const Expr& f : x.children()) loops.push_back(Expr::loop(f));
      return Rewrite{"R5", Expr::product(std::move(loops))};
    }
    return std::nullopt;
  }

  static std::optional<Rewrite> james_rule(const Expr& e) {
    if (e.stage() == 0 || e.child().is(Kind::Point)) return Rewrite{"R6", Expr::point()};
    if (e.stage() == 1) return Rewrite{"R6", e.child()};
    return std::nullopt;
  }

  std::vector<TraceStep>* log_;
  bool truncated_ = false;
};

WedgeNormalForm to_wnf(const Expr& nf, int cap, bool truncated) {
  WedgeNormalForm out;
  out.cap = cap;
  out.complete = !truncated;
  std::vector<Expr> parts;
  if (nf.is(Kind::Wedge)) parts = nf.children();
  else if (!nf.is(Kind::Point)) parts.push_back(nf);
  for (Expr& p : parts) {
    if (connectivity(p) < cap) out.summands.push_back(std::move(p));
    else out.complete = false;
  }
  std::stable_sort(out.summands.begin(), out.summands.end(), summand_less);
  return out;
}

void check_cap(int cap) {
  if (cap < 1) throw Error(ErrorCode::Parameter, "cap must be >= 1");
}

std::optional<Expr> replace_first(const Expr& e, const Expr& before, const Expr& after) {
  for (std::size_t i = 0; i < e.children().size(); ++i) {
    if (auto r = replace_first(e.child(i), before, after)) {
      std::vector<Expr> kids = e.children();
      kids[i] = *r;
      return e.with_children(std::move(kids));
    }
  }
  if (e == before) return after;
  return std::nullopt;
}

}  // namespace

WedgeNormalForm normalize(const Expr& e, int cap) {
  check_cap(cap);
  Normalizer nz(nullptr);
  Expr nf = nz.run(e, cap);
  return to_wnf(nf, cap, nz.truncated());
}

std::vector<TraceStep> trace(const Expr& e, int cap) {
  check_cap(cap);
  std::vector<TraceStep> steps;
  Normalizer nz(&steps);
  nz.run(e, cap);
  return steps;
}

Expr fold_trace(const Expr& e, const std::vector<TraceStep>& steps) {
  Expr cur = e;
  for (const TraceStep& s : steps) {
    auto r = replace_first(cur, s.before, s.after);
    if (!r) throw Error(ErrorCode::Parameter, "trace step does not apply: " + render(s.before));
    cur = *r;
  }
  return cur;
}

WedgeNormalForm restrict_to(const WedgeNormalForm& wnf, int cap) {
  check_cap(cap);
  WedgeNormalForm out;
  out.cap = cap;
  out.complete = wnf.complete;
  for (const Expr& s : wnf.summands) {
    if (connectivity(s) >= cap) {
      out.complete = false;
      continue;
    }
    if (summand_kind(s) != SummandKind::Residue) {
      out.summands.push_back(s);
      continue;
    }
    WedgeNormalForm inner = normalize(s, cap);
    out.complete = out.complete && inner.complete;
    out.summands.insert(out.summands.end(), inner.summands.begin(), inner.summands.end());
  }
  std::stable_sort(out.summands.begin(), out.summands.end(), summand_less);
  return out;
}

}  // namespace loopcalc
