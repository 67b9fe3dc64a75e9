#include "qwp/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>

#include "qwp/pairs.hpp"
#include "qwp/pochhammer.hpp"
#include "qwp/qfunctions.hpp"

namespace qwp {
namespace {

using std::vector;

QMonomial rat(long long v) { return QMonomial(Rational(v), 0); }
QMonomial qm(long long e) { return QMonomial::q(e); }

QMonomial bv(const Bindings& bs, const char* name) {
  auto it = bs.find(name);
  if (it == bs.end())
    throw std::logic_error(std::string("missing binding: ") + name);
  return it->second;
}

// x^n q^extra as a single monomial.
QMonomial powq(const QMonomial& x, long long n, long long extra) {
  return QMonomial(x.c.pow(n), x.e * n + extra);
}

// (-1)^n coeff q^e.
QMonomial alt(long long n, long long coeff, long long e) {
  return QMonomial(Rational(n % 2 ? -coeff : coeff), e);
}

// Sum of term(n, w) for n >= start, with the working order padded until the
// requested order is honestly reached.
LaurentSeries asum(long long order, long long start,
                   const std::function<LaurentSeries(long long, long long)>& term) {
  return build_to_order(order, [&](long long w) {
    return sum_terms(start, [&](long long n) { return term(n, w); }, w);
  });
}

// ---------------------------------------------------------------------------
// Degeneracy guards. Every case validates its denominators before any series
// work starts, so a bad binding reports cleanly instead of surfacing as a
// division error deep inside a summand.

void need(bool ok, const std::string& what) {
  if (!ok) throw degenerate_error("constraint violated: " + what);
}

void need_nonzero(const QMonomial& x, const std::string& what) {
  need(!x.is_zero(), what + " must be nonzero");
}

// Scalar denominator (1 - x).
void need_unitfree(const QMonomial& x, const std::string& what) {
  need(!x.is_one(), "(1 - " + what + ") vanishes");
}

// Some factor (x q^{r i}; q^r), i >= 0, is identically zero.
bool poch_vanishes(const QMonomial& x, long long r) {
  return x.c.is_one() && x.e <= 0 && ((-x.e) % r) == 0;
}

void need_poch_den(const QMonomial& x, long long r, const std::string& what) {
  need(!poch_vanishes(x, r), "(" + what + ") has a vanishing factor");
}

// Lambert series in x q^{rn} needs e + r >= 1 to stay a formal Laurent series.
void need_lambert(const QMonomial& x, long long r, const std::string& what) {
  need_nonzero(x, what);
  need(x.e + r >= 1, what + " outside the Lambert region (e + r >= 1)");
}

// ---------------------------------------------------------------------------
// Pair families, bundled with the denominator constraints their members add.

struct BaileyFamily {
  std::function<WPPair(const Bindings&, const QMonomial&, long long)> make;
  std::function<void(const Bindings&, const QMonomial&, long long)> validate;
};

BaileyFamily unit_family() {
  return {[](const Bindings&, const QMonomial& a, long long m) {
            return make_unit_pair(a, m);
          },
          [](const Bindings&, const QMonomial& a, long long m) {
            need_nonzero(a, "a");
            need_unitfree(a, "a");
            need_poch_den(qm(m), m, "q^m; q^m");
          }};
}

BaileyFamily trivial_family() {
  return {[](const Bindings&, const QMonomial& a, long long m) {
            return make_trivial_pair(a, m);
          },
          [](const Bindings&, const QMonomial& a, long long m) {
            need_nonzero(a, "a");
            need_poch_den(a.shift(m), m, "a q^m; q^m");
          }};
}

BaileyFamily slater_family() {
  return {[](const Bindings& bs, const QMonomial& a, long long m) {
            return make_slater_pair(a, bv(bs, "c"), bv(bs, "d"), m);
          },
          [](const Bindings& bs, const QMonomial& a, long long m) {
            QMonomial c = bv(bs, "c"), d = bv(bs, "d");
            need_nonzero(a, "a");
            need_nonzero(c, "c");
            need_nonzero(d, "d");
            need_unitfree(a, "a");
            need_poch_den((a / c).shift(m), m, "a q^m/c; q^m");
            need_poch_den((a / d).shift(m), m, "a q^m/d; q^m");
          }};
}

BaileyFamily msz_family() {
  return {[](const Bindings& bs, const QMonomial& a, long long m) {
            return make_msz_pair(a, bv(bs, "d"), m);
          },
          [](const Bindings& bs, const QMonomial& a, long long m) {
            QMonomial d = bv(bs, "d");
            need_nonzero(a, "a");
            need_nonzero(d, "d");
            need_unitfree(a, "a");
            need_poch_den((a / d).shift(2 * m), 2 * m, "a q^{2m}/d; q^{2m}");
            need_poch_den((a / d).shift(m), m, "a q^m/d; q^m");
            need_poch_den(a.shift(m), 2 * m, "a q^m; q^{2m}");
          }};
}

struct WPFamily {
  std::function<WPPair(const Bindings&, const QMonomial&, const QMonomial&,
                       long long)>
      make;
  std::function<void(const Bindings&, const QMonomial&, const QMonomial&,
                     long long)>
      validate;
};

WPFamily singh_family() {
  return {[](const Bindings& bs, const QMonomial& a, const QMonomial& k,
             long long m) {
            return make_singh_pair(a, k, bv(bs, "p1"), bv(bs, "p2"), m);
          },
          [](const Bindings& bs, const QMonomial& a, const QMonomial& k,
             long long m) {
            QMonomial p1 = bv(bs, "p1"), p2 = bv(bs, "p2");
            need_nonzero(a, "a");
            need_nonzero(k, "k");
            need_nonzero(p1, "p1");
            need_nonzero(p2, "p2");
            need_poch_den((a / p1).shift(m), m, "a q^m/p1; q^m");
            need_poch_den((a / p2).shift(m), m, "a q^m/p2; q^m");
            need_poch_den(k * p1 * p2 / a, m, "k p1 p2/a; q^m");
          }};
}

WPFamily ab_family() {
  return {[](const Bindings&, const QMonomial& a, const QMonomial& k,
             long long m) { return make_ab_pair(a, k, m); },
          [](const Bindings&, const QMonomial& a, const QMonomial& k,
             long long m) {
            need_nonzero(a, "a");
            need_nonzero(k, "k");
            need_poch_den((a * a / k).shift(2 * m), m, "a^2 q^{2m}/k; q^m");
            need_poch_den(k, m, "k; q^m");
          }};
}

// Denominators shared by every appearance of the closed-form right side of
// the inverted-parameter transforms.
void validate_closed_form(const QMonomial& a, const QMonomial& k,
                          const QMonomial& z) {
  need_nonzero(a, "a");
  need_nonzero(k, "k");
  need_nonzero(z, "z");
  need_unitfree(a, "a");
  need_unitfree(k, "k");
  need_unitfree(a / z, "a/z");
  need_unitfree(k / z, "k/z");
  need_poch_den(z / k, 1, "z/k; q");
  need_poch_den((k / z).shift(1), 1, "q k/z; q");
  need_poch_den(z / a, 1, "z/a; q");
  need_poch_den((a / z).shift(1), 1, "q a/z; q");
  need_poch_den(a, 1, "a; q");
  need_poch_den(a.inverse().shift(1), 1, "q/a; q");
  need_poch_den(k, 1, "k; q");
  need_poch_den(k.inverse().shift(1), 1, "q/k; q");
}

// ---------------------------------------------------------------------------
// Case registration, grouped by the shape of the identity.

// Beta sum equals an eight-product ratio times the alpha sum.
void add_wpeq(vector<IdentityCase>& out, const std::string& id,
              const std::string& flavor, const WPFamily& fam,
              Bindings defaults, vector<std::string> rnd) {
  IdentityCase cs;
  cs.id = id;
  cs.title = "Well-poised beta sum equals product times alpha sum (" + flavor +
             " pair)";
  cs.paper_eq = "wpeq";
  cs.tags = {"wp"};
  cs.constraints =
      "a, k, y, z nonzero; k != 1; qk/y, qk/z, qa/y, qa/z, qa, qa/yz "
      "nonvanishing; pair parameters admissible";
  cs.defaults = std::move(defaults);
  cs.randomizable = std::move(rnd);
  cs.validate = [fam](const Bindings& bs) {
    QMonomial a = bv(bs, "a"), k = bv(bs, "k"), y = bv(bs, "y"),
              z = bv(bs, "z");
    need_nonzero(y, "y");
    need_nonzero(z, "z");
    need_unitfree(k, "k");
    need_poch_den((k / y).shift(1), 1, "q k/y; q");
    need_poch_den((k / z).shift(1), 1, "q k/z; q");
    need_poch_den((a / y).shift(1), 1, "q a/y; q");
    need_poch_den((a / z).shift(1), 1, "q a/z; q");
    need_poch_den(a.shift(1), 1, "q a; q");
    need_poch_den((a / (y * z)).shift(1), 1, "q a/yz; q");
    fam.validate(bs, a, k, 1);
  };
  cs.lhs = [fam](const Bindings& bs, long long order) {
    QMonomial a = bv(bs, "a"), k = bv(bs, "k"), y = bv(bs, "y"),
              z = bv(bs, "z");
    WPPair pair = fam.make(bs, a, k, 1);
    return asum(order, 0, [&](long long n, long long w) {
      LaurentSeries num = vwp_ratio(k, 1, n, w) * poch_multi({y, z}, 1, n, w);
      LaurentSeries den =
          poch_multi({(k / y).shift(1), (k / z).shift(1)}, 1, n, w);
      return (num * den.inverse(w) * pair.beta(n, w))
          .times(powq(a / (y * z), n, n));
    });
  };
  cs.rhs = [fam](const Bindings& bs, long long order) {
    QMonomial a = bv(bs, "a"), k = bv(bs, "k"), y = bv(bs, "y"),
              z = bv(bs, "z");
    WPPair pair = fam.make(bs, a, k, 1);
    return build_to_order(order, [&](long long w) {
      LaurentSeries prod = poch_inf_ratio(
          {k.shift(1), (k / (y * z)).shift(1), (a / y).shift(1),
           (a / z).shift(1)},
          {(k / y).shift(1), (k / z).shift(1), a.shift(1),
           (a / (y * z)).shift(1)},
          1, w);
      LaurentSeries sum = sum_terms(
          0,
          [&](long long n) {
            LaurentSeries num = poch_multi({y, z}, 1, n, w);
            LaurentSeries den =
                poch_multi({(a / y).shift(1), (a / z).shift(1)}, 1, n, w);
            return (num * den.inverse(w) * pair.alpha(n, w))
                .times(powq(a / (y * z), n, n));
          },
          w);
      return prod * sum;
    });
  };
  out.push_back(std::move(cs));
}

// Difference of a beta sum and an alpha sum collapses to the kernel series f.
void add_lemma_p1(vector<IdentityCase>& out, const std::string& id,
                  const std::string& flavor, const WPFamily& fam,
                  Bindings defaults, vector<std::string> rnd) {
  IdentityCase cs;
  cs.id = id;
  cs.title = "Beta/alpha difference sums to the kernel series (" + flavor +
             " pair)";
  cs.paper_eq = "wpeq2";
  cs.tags = {"wp", "lemma"};
  cs.constraints =
      "a, k, z nonzero; k != 1; qk, qk/z, qa, qa/z nonvanishing; pair "
      "parameters admissible";
  cs.defaults = std::move(defaults);
  cs.randomizable = std::move(rnd);
  cs.validate = [fam](const Bindings& bs) {
    QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z");
    need_nonzero(z, "z");
    need_unitfree(k, "k");
    need_poch_den(k.shift(1), 1, "q k; q");
    need_poch_den((k / z).shift(1), 1, "q k/z; q");
    need_poch_den(a.shift(1), 1, "q a; q");
    need_poch_den((a / z).shift(1), 1, "q a/z; q");
    fam.validate(bs, a, k, 1);
  };
  cs.lhs = [fam](const Bindings& bs, long long order) {
    QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z");
    WPPair pair = fam.make(bs, a, k, 1);
    LaurentSeries bsum = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries num = vwp_ratio(k, 1, n, w) * poch_finite(z, 1, n, w) *
                          poch_finite(qm(1), 1, n - 1, w);
      LaurentSeries den =
          poch_multi({k.shift(1), (k / z).shift(1)}, 1, n, w);
      return (num * den.inverse(w) * pair.beta(n, w))
          .times(powq(a / z, n, n));
    });
    LaurentSeries ssum = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries num =
          poch_finite(z, 1, n, w) * poch_finite(qm(1), 1, n - 1, w);
      LaurentSeries den =
          poch_multi({a.shift(1), (a / z).shift(1)}, 1, n, w);
      return (num * den.inverse(w) * pair.alpha(n, w))
          .times(powq(a / z, n, n));
    });
    return bsum - ssum;
  };
  cs.rhs = [](const Bindings& bs, long long order) {
    return f_series(bv(bs, "a"), bv(bs, "k"), bv(bs, "z"), 1, order);
  };
  out.push_back(std::move(cs));
}

// Four sums over a pair at (a,k) and at (1/a,1/k) equal the closed form.
void add_thm1(vector<IdentityCase>& out, const std::string& id,
              const std::string& flavor, const WPFamily& fam,
              Bindings defaults, vector<std::string> rnd) {
  IdentityCase cs;
  cs.id = id;
  cs.title = "Inverted-parameter four-sum transform in closed form (" +
             flavor + " pair)";
  cs.paper_eq = "wpeq8";
  cs.tags = {"wp"};
  cs.constraints =
      "a, k, z nonzero; a, k != 1; a, k != z; closed-form products and pair "
      "parameters (at both (a,k) and (1/a,1/k)) nonvanishing";
  cs.defaults = std::move(defaults);
  cs.randomizable = std::move(rnd);
  cs.validate = [fam](const Bindings& bs) {
    QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z");
    validate_closed_form(a, k, z);
    need_poch_den(k.shift(1), 1, "q k; q");
    need_poch_den(a.shift(1), 1, "q a; q");
    need_poch_den((z / k).shift(1), 1, "q z/k; q");
    need_poch_den((z / a).shift(1), 1, "q z/a; q");
    fam.validate(bs, a, k, 1);
    fam.validate(bs, a.inverse(), k.inverse(), 1);
  };
  cs.lhs = [fam](const Bindings& bs, long long order) {
    QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z");
    WPPair pair = fam.make(bs, a, k, 1);
    WPPair inv = fam.make(bs, a.inverse(), k.inverse(), 1);
    LaurentSeries s1 = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries num = vwp_ratio(k, 1, n, w) * poch_finite(z, 1, n, w) *
                          poch_finite(qm(1), 1, n - 1, w);
      LaurentSeries den = poch_multi({k.shift(1), (k / z).shift(1)}, 1, n, w);
      return (num * den.inverse(w) * pair.beta(n, w))
          .times(powq(a / z, n, n));
    });
    LaurentSeries s2 = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries num = vwp_ratio(k.inverse(), 1, n, w) *
                          poch_finite(z.inverse(), 1, n, w) *
                          poch_finite(qm(1), 1, n - 1, w);
      LaurentSeries den =
          poch_multi({k.inverse().shift(1), (z / k).shift(1)}, 1, n, w);
      return (num * den.inverse(w) * inv.beta(n, w))
          .times(powq(z / a, n, n));
    });
    LaurentSeries s3 = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries num =
          poch_finite(z, 1, n, w) * poch_finite(qm(1), 1, n - 1, w);
      LaurentSeries den = poch_multi({a.shift(1), (a / z).shift(1)}, 1, n, w);
      return (num * den.inverse(w) * pair.alpha(n, w))
          .times(powq(a / z, n, n));
    });
    LaurentSeries s4 = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries num = poch_finite(z.inverse(), 1, n, w) *
                          poch_finite(qm(1), 1, n - 1, w);
      LaurentSeries den =
          poch_multi({a.inverse().shift(1), (z / a).shift(1)}, 1, n, w);
      return (num * den.inverse(w) * inv.alpha(n, w))
          .times(powq(z / a, n, n));
    });
    return s1 - s2 - s3 + s4;
  };
  cs.rhs = [](const Bindings& bs, long long order) {
    return f_closed_form(bv(bs, "a"), bv(bs, "k"), bv(bs, "z"), 1, order);
  };
  out.push_back(std::move(cs));
}

// Three beta sums (at (a,k), (-a,-k), and (a^2,k^2) with doubled base) equal
// the corresponding three alpha sums.
void add_thm2(vector<IdentityCase>& out, const std::string& id,
              const std::string& flavor, const WPFamily& fam,
              Bindings defaults, vector<std::string> rnd) {
  IdentityCase cs;
  cs.id = id;
  cs.title = "Parameter-doubling three-sum transform (" + flavor + " pair)";
  cs.paper_eq = "wpeq2n";
  cs.tags = {"wp"};
  cs.constraints =
      "a, k, z nonzero; k != 1, -1; all of qk, -qk, q^2k^2 (base q^2), qa, "
      "-qa, q^2a^2 and their /z companions nonvanishing; pair parameters "
      "admissible at (a,k), (-a,-k), (a^2,k^2)";
  cs.defaults = std::move(defaults);
  cs.randomizable = std::move(rnd);
  cs.validate = [fam](const Bindings& bs) {
    QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z");
    need_nonzero(a, "a");
    need_nonzero(z, "z");
    need_unitfree(k, "k");
    need_unitfree(-k, "-k");
    for (const QMonomial& x :
         {k.shift(1), (k / z).shift(1), (-k).shift(1), ((-k) / z).shift(1),
          a.shift(1), (a / z).shift(1), (-a).shift(1), ((-a) / z).shift(1)})
      need_poch_den(x, 1, "base denominator");
    for (const QMonomial& x :
         {(k * k).shift(2), (k * k / (z * z)).shift(2), (a * a).shift(2),
          (a * a / (z * z)).shift(2)})
      need_poch_den(x, 2, "doubled-base denominator");
    fam.validate(bs, a, k, 1);
    fam.validate(bs, -a, -k, 1);
    fam.validate(bs, a * a, k * k, 2);
  };
  auto legs = [fam](const Bindings& bs, long long order, bool beta_side) {
    QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z");
    WPPair p1 = fam.make(bs, a, k, 1);
    WPPair p2 = fam.make(bs, -a, -k, 1);
    WPPair p3 = fam.make(bs, a * a, k * k, 2);
    auto member = [beta_side](const WPPair& p, long long n, long long w) {
      return beta_side ? p.beta(n, w) : p.alpha(n, w);
    };
    LaurentSeries l1 = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries t = poch_finite(z, 1, n, w) *
                        poch_finite(qm(1), 1, n - 1, w) * member(p1, n, w);
      if (beta_side)
        t = t * vwp_ratio(k, 1, n, w) *
            poch_multi({k.shift(1), (k / z).shift(1)}, 1, n, w).inverse(w);
      else
        t = t * poch_multi({a.shift(1), (a / z).shift(1)}, 1, n, w).inverse(w);
      return t.times(powq(a / z, n, n));
    });
    LaurentSeries l2 = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries t = poch_finite(z, 1, n, w) *
                        poch_finite(qm(1), 1, n - 1, w) * member(p2, n, w);
      if (beta_side)
        t = t * vwp_ratio(-k, 1, n, w) *
            poch_multi({(-k).shift(1), ((-k) / z).shift(1)}, 1, n, w)
                .inverse(w);
      else
        t = t *
            poch_multi({(-a).shift(1), ((-a) / z).shift(1)}, 1, n, w)
                .inverse(w);
      return t.times(powq((-a) / z, n, n));
    });
    LaurentSeries l3 = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries t = poch_finite(z * z, 2, n, w) *
                        poch_finite(qm(2), 2, n - 1, w) * member(p3, n, w);
      if (beta_side)
        t = t * vwp_ratio(k * k, 2, n, w) *
            poch_multi({(k * k).shift(2), (k * k / (z * z)).shift(2)}, 2, n, w)
                .inverse(w);
      else
        t = t *
            poch_multi({(a * a).shift(2), (a * a / (z * z)).shift(2)}, 2, n, w)
                .inverse(w);
      return t.times(powq(a * a / (z * z), n, 2 * n));
    });
    return l1 + l2 - l3.times(rat(2));
  };
  cs.lhs = [legs](const Bindings& bs, long long order) {
    return legs(bs, order, true);
  };
  cs.rhs = [legs](const Bindings& bs, long long order) {
    return legs(bs, order, false);
  };
  out.push_back(std::move(cs));
}

// The k -> 0 limit of the three-sum transform, over a Bailey pair.
void add_cor_c33(vector<IdentityCase>& out, const std::string& id,
                 const std::string& flavor, const BaileyFamily& fam,
                 Bindings defaults, vector<std::string> rnd) {
  IdentityCase cs;
  cs.id = id;
  cs.title = "Parameter-doubling three-sum transform, k = 0 limit (" + flavor +
             " pair)";
  cs.paper_eq = "wpeq2nn";
  cs.tags = {"bailey"};
  cs.constraints =
      "a, z nonzero; qa, -qa, q^2a^2 (base q^2) and their /z companions "
      "nonvanishing; pair parameters admissible at a, -a, a^2";
  cs.defaults = std::move(defaults);
  cs.randomizable = std::move(rnd);
  cs.validate = [fam](const Bindings& bs) {
    QMonomial a = bv(bs, "a"), z = bv(bs, "z");
    need_nonzero(z, "z");
    for (const QMonomial& x :
         {a.shift(1), (a / z).shift(1), (-a).shift(1), ((-a) / z).shift(1)})
      need_poch_den(x, 1, "base denominator");
    for (const QMonomial& x : {(a * a).shift(2), (a * a / (z * z)).shift(2)})
      need_poch_den(x, 2, "doubled-base denominator");
    fam.validate(bs, a, 1);
    fam.validate(bs, -a, 1);
    fam.validate(bs, a * a, 2);
  };
  auto legs = [fam](const Bindings& bs, long long order, bool beta_side) {
    QMonomial a = bv(bs, "a"), z = bv(bs, "z");
    WPPair p1 = fam.make(bs, a, 1);
    WPPair p2 = fam.make(bs, -a, 1);
    WPPair p3 = fam.make(bs, a * a, 2);
    auto member = [beta_side](const WPPair& p, long long n, long long w) {
      return beta_side ? p.beta(n, w) : p.alpha(n, w);
    };
    LaurentSeries l1 = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries t = poch_finite(z, 1, n, w) *
                        poch_finite(qm(1), 1, n - 1, w) * member(p1, n, w);
      if (!beta_side)
        t = t * poch_multi({a.shift(1), (a / z).shift(1)}, 1, n, w).inverse(w);
      return t.times(powq(a / z, n, n));
    });
    LaurentSeries l2 = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries t = poch_finite(z, 1, n, w) *
                        poch_finite(qm(1), 1, n - 1, w) * member(p2, n, w);
      if (!beta_side)
        t = t *
            poch_multi({(-a).shift(1), ((-a) / z).shift(1)}, 1, n, w)
                .inverse(w);
      return t.times(powq((-a) / z, n, n));
    });
    LaurentSeries l3 = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries t = poch_finite(z * z, 2, n, w) *
                        poch_finite(qm(2), 2, n - 1, w) * member(p3, n, w);
      if (!beta_side)
        t = t *
            poch_multi({(a * a).shift(2), (a * a / (z * z)).shift(2)}, 2, n, w)
                .inverse(w);
      return t.times(powq(a * a / (z * z), n, 2 * n));
    });
    return l1 + l2 - l3.times(rat(2));
  };
  cs.lhs = [legs](const Bindings& bs, long long order) {
    return legs(bs, order, true);
  };
  cs.rhs = [legs](const Bindings& bs, long long order) {
    return legs(bs, order, false);
  };
  out.push_back(std::move(cs));
}

// Bailey beta/alpha difference equal to a named limit kernel.
enum class F1Rep { series, simple, lambert };

void add_thm_t2(vector<IdentityCase>& out, const std::string& id,
                const std::string& flavor, const BaileyFamily& fam,
                F1Rep rep, Bindings defaults, vector<std::string> rnd) {
  IdentityCase cs;
  cs.id = id;
  cs.title = "Bailey beta/alpha difference equals the first limit kernel (" +
             flavor + " pair)";
  cs.paper_eq = "wpeq10";
  cs.tags = {"bailey"};
  cs.constraints =
      "a, z nonzero; a != 1; qa, qa/z nonvanishing; pair parameters "
      "admissible";
  cs.defaults = std::move(defaults);
  cs.randomizable = std::move(rnd);
  cs.validate = [fam, rep](const Bindings& bs) {
    QMonomial a = bv(bs, "a"), z = bv(bs, "z");
    need_nonzero(z, "z");
    need_unitfree(a, "a");
    need_poch_den(a.shift(1), 1, "q a; q");
    need_poch_den((a / z).shift(1), 1, "q a/z; q");
    if (rep == F1Rep::lambert) {
      need_lambert(a, 1, "a");
      need_lambert(a / z, 1, "a/z");
    }
    fam.validate(bs, a, 1);
  };
  cs.lhs = [fam](const Bindings& bs, long long order) {
    QMonomial a = bv(bs, "a"), z = bv(bs, "z");
    WPPair pair = fam.make(bs, a, 1);
    LaurentSeries bsum = asum(order, 1, [&](long long n, long long w) {
      return (poch_finite(z, 1, n, w) * poch_finite(qm(1), 1, n - 1, w) *
              pair.beta(n, w))
          .times(powq(a / z, n, n));
    });
    LaurentSeries ssum = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries den = poch_multi({a.shift(1), (a / z).shift(1)}, 1, n, w);
      return (poch_finite(z, 1, n, w) * poch_finite(qm(1), 1, n - 1, w) *
              den.inverse(w) * pair.alpha(n, w))
          .times(powq(a / z, n, n));
    });
    return bsum - ssum;
  };
  cs.rhs = [rep](const Bindings& bs, long long order) {
    QMonomial a = bv(bs, "a"), z = bv(bs, "z");
    switch (rep) {
      case F1Rep::series: return f1_series(a, z, 1, order);
      case F1Rep::simple: return f1_simple(a, z, 1, order);
      default: return f1_lambert(a, z, 1, order);
    }
  };
  out.push_back(std::move(cs));
}

// The z -> infinity specialization of the previous shape.
void add_cor_c4(vector<IdentityCase>& out, const std::string& id,
                const std::string& flavor, const BaileyFamily& fam,
                bool simple_rep, Bindings defaults, vector<std::string> rnd) {
  IdentityCase cs;
  cs.id = id;
  cs.title = "Bailey beta/alpha difference equals the second limit kernel (" +
             flavor + " pair)";
  cs.paper_eq = "wpeq11";
  cs.tags = {"bailey"};
  cs.constraints = "a nonzero; a != 1; qa nonvanishing; pair parameters "
                   "admissible";
  cs.defaults = std::move(defaults);
  cs.randomizable = std::move(rnd);
  cs.validate = [fam](const Bindings& bs) {
    QMonomial a = bv(bs, "a");
    need_unitfree(a, "a");
    need_poch_den(a.shift(1), 1, "q a; q");
    fam.validate(bs, a, 1);
  };
  cs.lhs = [fam](const Bindings& bs, long long order) {
    QMonomial a = bv(bs, "a");
    WPPair pair = fam.make(bs, a, 1);
    LaurentSeries bsum = asum(order, 1, [&](long long n, long long w) {
      return (poch_finite(qm(1), 1, n - 1, w) * pair.beta(n, w))
          .times(powq(-a, n, n * (n + 1) / 2));
    });
    LaurentSeries ssum = asum(order, 1, [&](long long n, long long w) {
      return (poch_finite(qm(1), 1, n - 1, w) *
              poch_finite(a.shift(1), 1, n, w).inverse(w) * pair.alpha(n, w))
          .times(powq(-a, n, n * (n + 1) / 2));
    });
    return bsum - ssum;
  };
  cs.rhs = [simple_rep](const Bindings& bs, long long order) {
    QMonomial a = bv(bs, "a");
    return simple_rep ? f2_simple(a, 1, order) : f2_series(a, 1, order);
  };
  out.push_back(std::move(cs));
}

// The z -> -q^{1/2}-style even specialization: doubled-base weights.
void add_cor_cz1(vector<IdentityCase>& out, const std::string& id,
                 const std::string& flavor, const BaileyFamily& fam,
                 bool simple_rep, Bindings defaults, vector<std::string> rnd) {
  IdentityCase cs;
  cs.id = id;
  cs.title = "Bailey beta/alpha difference equals the third limit kernel (" +
             flavor + " pair)";
  cs.paper_eq = "wpeq12";
  cs.tags = {"bailey"};
  cs.constraints =
      "a nonzero; a != 1; qa and q^2a^2 (base q^2) nonvanishing; pair "
      "parameters admissible";
  cs.defaults = std::move(defaults);
  cs.randomizable = std::move(rnd);
  cs.validate = [fam](const Bindings& bs) {
    QMonomial a = bv(bs, "a");
    need_unitfree(a, "a");
    need_poch_den(a.shift(1), 1, "q a; q");
    need_poch_den((a * a).shift(2), 2, "q^2 a^2; q^2");
    fam.validate(bs, a, 1);
  };
  cs.lhs = [fam](const Bindings& bs, long long order) {
    QMonomial a = bv(bs, "a");
    WPPair pair = fam.make(bs, a, 1);
    LaurentSeries bsum = asum(order, 1, [&](long long n, long long w) {
      return (poch_finite(qm(2), 2, n - 1, w) * pair.beta(n, w))
          .times(powq(-a, n, n));
    });
    LaurentSeries ssum = asum(order, 1, [&](long long n, long long w) {
      return (poch_finite(qm(2), 2, n - 1, w) *
              poch_finite((a * a).shift(2), 2, n, w).inverse(w) *
              pair.alpha(n, w))
          .times(powq(-a, n, n));
    });
    return bsum - ssum;
  };
  cs.rhs = [simple_rep](const Bindings& bs, long long order) {
    QMonomial a = bv(bs, "a");
    return simple_rep ? f3_simple(a, 1, order) : f3_series(a, 1, order);
  };
  out.push_back(std::move(cs));
}

// Two-representation agreement cases for the limit kernels.
void add_rep_case(vector<IdentityCase>& out, const std::string& id,
                  const std::string& title, const std::string& paper_eq,
                  vector<std::string> tags, Bindings defaults,
                  vector<std::string> rnd,
                  std::function<void(const Bindings&)> validate,
                  std::function<LaurentSeries(const Bindings&, long long)> lhs,
                  std::function<LaurentSeries(const Bindings&, long long)> rhs,
                  const std::string& constraints, long long order = 25) {
  IdentityCase cs;
  cs.id = id;
  cs.title = title;
  cs.paper_eq = paper_eq;
  cs.tags = std::move(tags);
  cs.constraints = constraints;
  cs.defaults = std::move(defaults);
  cs.randomizable = std::move(rnd);
  cs.default_order = order;
  cs.validate = std::move(validate);
  cs.lhs = std::move(lhs);
  cs.rhs = std::move(rhs);
  out.push_back(std::move(cs));
}

// Lattice cross-check: three-sum cubic theta identity over a Bailey pair
// bound at a = 1/q and a = 1/q^2 with base q^3.
void add_aq_general(vector<IdentityCase>& out, const std::string& id,
                    const std::string& flavor, const BaileyFamily& fam,
                    Bindings defaults, vector<std::string> rnd) {
  IdentityCase cs;
  cs.id = id;
  cs.title = "Cubic lattice theta from a Bailey pair at 1/q and 1/q^2 (" +
             flavor + " pair)";
  cs.paper_eq = "corlameq3";
  cs.tags = {"theta", "bailey"};
  cs.constraints = "pair parameters admissible at (1/q, q^3) and (1/q^2, q^3)";
  cs.defaults = std::move(defaults);
  cs.randomizable = std::move(rnd);
  cs.validate = [fam](const Bindings& bs) {
    fam.validate(bs, qm(-1), 3);
    fam.validate(bs, qm(-2), 3);
  };
  cs.lhs = [](const Bindings&, long long order) { return borwein_a(order); };
  cs.rhs = [fam](const Bindings& bs, long long order) {
    WPPair p1 = fam.make(bs, qm(-1), 3);
    WPPair p2 = fam.make(bs, qm(-2), 3);
    LaurentSeries b1 = asum(order, 1, [&](long long n, long long w) {
      return (poch_finite(qm(3), 3, n - 1, w) * p1.beta(n, w))
          .times(alt(n, 6, (3 * n * n + n) / 2));
    });
    LaurentSeries b2 = asum(order, 1, [&](long long n, long long w) {
      return (poch_finite(qm(3), 3, n - 1, w) * p2.beta(n, w))
          .times(alt(n, 6, (3 * n * n - n) / 2));
    });
    LaurentSeries a1 = asum(order, 1, [&](long long n, long long w) {
      return (poch_finite(qm(3), 3, n - 1, w) *
              poch_finite(qm(2), 3, n, w).inverse(w) * p1.alpha(n, w))
          .times(alt(n, 6, (3 * n * n + n) / 2));
    });
    LaurentSeries a2 = asum(order, 1, [&](long long n, long long w) {
      return (poch_finite(qm(3), 3, n - 1, w) *
              poch_finite(qm(1), 3, n, w).inverse(w) * p2.alpha(n, w))
          .times(alt(n, 6, (3 * n * n - n) / 2));
    });
    return build_to_order(order, [&](long long w) {
      return LaurentSeries::one(w) + b1 - b2 - a1 + a2;
    });
  };
  out.push_back(std::move(cs));
}

// Odd-theta cross-check: four-sum identity over a Bailey pair bound at
// a = 1/q and a = 1/q^2 with base q^3, weights on base q^6.
void add_psi_general(vector<IdentityCase>& out, const std::string& id,
                     const std::string& flavor, const BaileyFamily& fam,
                     Bindings defaults, vector<std::string> rnd) {
  IdentityCase cs;
  cs.id = id;
  cs.title = "Odd theta cube ratio from a Bailey pair at 1/q and 1/q^2 (" +
             flavor + " pair)";
  cs.paper_eq = "psieq2";
  cs.tags = {"theta", "bailey"};
  cs.constraints = "pair parameters admissible at (1/q, q^3) and (1/q^2, q^3)";
  cs.defaults = std::move(defaults);
  cs.randomizable = std::move(rnd);
  cs.validate = [fam](const Bindings& bs) {
    fam.validate(bs, qm(-1), 3);
    fam.validate(bs, qm(-2), 3);
  };
  cs.lhs = [](const Bindings&, long long order) {
    return build_to_order(order, [&](long long w) {
      return (theta_psi(qm(3), w).pow(3) * theta_psi(qm(1), w).inverse(w))
          .times(qm(1));
    });
  };
  cs.rhs = [fam](const Bindings& bs, long long order) {
    WPPair p1 = fam.make(bs, qm(-1), 3);
    WPPair p2 = fam.make(bs, qm(-2), 3);
    LaurentSeries b1 = asum(order, 1, [&](long long n, long long w) {
      return (poch_finite(qm(6), 6, n - 1, w) * p1.beta(n, w))
          .times(alt(n, 1, 2 * n));
    });
    LaurentSeries b2 = asum(order, 1, [&](long long n, long long w) {
      return (poch_finite(qm(6), 6, n - 1, w) * p2.beta(n, w))
          .times(alt(n, 1, n));
    });
    LaurentSeries a1 = asum(order, 1, [&](long long n, long long w) {
      return (poch_finite(qm(6), 6, n - 1, w) *
              poch_finite(qm(4), 6, n, w).inverse(w) * p1.alpha(n, w))
          .times(alt(n, 1, 2 * n));
    });
    LaurentSeries a2 = asum(order, 1, [&](long long n, long long w) {
      return (poch_finite(qm(6), 6, n - 1, w) *
              poch_finite(qm(2), 6, n, w).inverse(w) * p2.alpha(n, w))
          .times(alt(n, 1, n));
    });
    return b1 - b2 + a2 - a1;
  };
  out.push_back(std::move(cs));
}

// Lambert value of a Bailey pair: alpha sum minus beta sum.
void add_la_pair(vector<IdentityCase>& out, const std::string& id,
                 const std::string& flavor, const BaileyFamily& fam,
                 Bindings defaults, vector<std::string> rnd) {
  IdentityCase cs;
  cs.id = id;
  cs.title =
      "Lambert series from a Bailey pair alpha/beta difference (" + flavor +
      " pair)";
  cs.paper_eq = "laeq";
  cs.tags = {"lambert", "bailey"};
  cs.constraints =
      "a nonzero with e >= 0; qa nonvanishing; pair parameters admissible";
  cs.defaults = std::move(defaults);
  cs.randomizable = std::move(rnd);
  cs.validate = [fam](const Bindings& bs) {
    QMonomial a = bv(bs, "a");
    need_lambert(a, 1, "a");
    need_poch_den(a.shift(1), 1, "q a; q");
    fam.validate(bs, a, 1);
  };
  cs.lhs = [](const Bindings& bs, long long order) {
    return lambert(bv(bs, "a"), 1, order);
  };
  cs.rhs = [fam](const Bindings& bs, long long order) {
    QMonomial a = bv(bs, "a");
    WPPair pair = fam.make(bs, a, 1);
    LaurentSeries ssum = asum(order, 1, [&](long long n, long long w) {
      return (poch_finite(qm(1), 1, n - 1, w) *
              poch_finite(a.shift(1), 1, n, w).inverse(w) * pair.alpha(n, w))
          .times(powq(-a, n, n * (n + 1) / 2));
    });
    LaurentSeries bsum = asum(order, 1, [&](long long n, long long w) {
      return (poch_finite(qm(1), 1, n - 1, w) * pair.beta(n, w))
          .times(powq(-a, n, n * (n + 1) / 2));
    });
    return ssum - bsum;
  };
  out.push_back(std::move(cs));
}

// One-variable deformation: beta sum minus weighted alpha sum equals a
// closed ratio of two infinite products.
void add_peq(vector<IdentityCase>& out, const std::string& id,
             const std::string& flavor, const BaileyFamily& fam,
             Bindings defaults, vector<std::string> rnd) {
  IdentityCase cs;
  cs.id = id;
  cs.title = "Deformed Bailey difference with product-ratio value (" + flavor +
             " pair)";
  cs.paper_eq = "peq";
  cs.tags = {"bailey"};
  cs.constraints =
      "a, y nonzero; y != 1; qa, qa/y nonvanishing; pair parameters "
      "admissible";
  cs.defaults = std::move(defaults);
  cs.randomizable = std::move(rnd);
  cs.validate = [fam](const Bindings& bs) {
    QMonomial a = bv(bs, "a"), y = bv(bs, "y");
    need_nonzero(y, "y");
    need_unitfree(y, "y");
    need_poch_den(a.shift(1), 1, "q a; q");
    need_poch_den((a / y).shift(1), 1, "q a/y; q");
    fam.validate(bs, a, 1);
  };
  cs.lhs = [fam](const Bindings& bs, long long order) {
    QMonomial a = bv(bs, "a"), y = bv(bs, "y");
    WPPair pair = fam.make(bs, a, 1);
    LaurentSeries bsum = asum(order, 1, [&](long long n, long long w) {
      return (poch_finite(y.shift(1), 1, n - 1, w) * pair.beta(n, w))
          .times(powq(-(a / y), n, n * (n + 1) / 2));
    });
    return build_to_order(order, [&](long long w) {
      LaurentSeries prod =
          poch_inf_ratio({(a / y).shift(1)}, {a.shift(1)}, 1, w);
      LaurentSeries ssum = sum_terms(
          1,
          [&](long long n) {
            return (poch_finite(y.shift(1), 1, n - 1, w) *
                    poch_finite((a / y).shift(1), 1, n, w).inverse(w) *
                    pair.alpha(n, w))
                .times(powq(-(a / y), n, n * (n + 1) / 2));
          },
          w);
      return bsum - prod * ssum;
    });
  };
  cs.rhs = [](const Bindings& bs, long long order) {
    QMonomial a = bv(bs, "a"), y = bv(bs, "y");
    return build_to_order(order, [&](long long w) {
      LaurentSeries prod =
          poch_inf_ratio({(a / y).shift(1)}, {a.shift(1)}, 1, w);
      return (prod - LaurentSeries::one(w)) *
             LaurentSeries::one_minus(y, w).inverse(w);
    });
  };
  out.push_back(std::move(cs));
}

// ---------------------------------------------------------------------------
// Singleton cases, in rough source order.

void add_kernel_lemmas(vector<IdentityCase>& out) {
  // f(a,k,z) + f(k,a,z) = 0.
  add_rep_case(
      out, "f-antisym", "Kernel series antisymmetry under a <-> k", "wpeq3",
      {"lemma"}, {{"a", rat(2)}, {"k", rat(3)}, {"z", rat(5)}}, {"a", "k", "z"},
      [](const Bindings& bs) {
        QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z");
        need_nonzero(z, "z");
        need_unitfree(a, "a");
        need_unitfree(k, "k");
        for (const QMonomial& x : {k.shift(1), (k / z).shift(1), a.shift(1),
                                   (a / z).shift(1)})
          need_poch_den(x, 1, "kernel denominator");
      },
      [](const Bindings& bs, long long order) {
        QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z");
        return build_to_order(order, [&](long long w) {
          return f_series(a, k, z, 1, w) + f_series(k, a, z, 1, w);
        });
      },
      [](const Bindings&, long long order) {
        return LaurentSeries::zero(order);
      },
      "a, k, z nonzero; a, k != 1; qk, qk/z, qa, qa/z nonvanishing");

  // g(a,k) g(k,a) = 1.
  add_rep_case(
      out, "g-recip", "Reciprocal product series under a <-> k", "wpeq4",
      {"lemma"},
      {{"a", rat(2)}, {"k", rat(3)}, {"y", rat(5)}, {"z", rat(7)}},
      {"a", "k", "y", "z"},
      [](const Bindings& bs) {
        QMonomial a = bv(bs, "a"), k = bv(bs, "k"), y = bv(bs, "y"),
                  z = bv(bs, "z");
        need_nonzero(y, "y");
        need_nonzero(z, "z");
        need_unitfree(a, "a");
        need_unitfree(k, "k");
        for (const QMonomial& x :
             {(k / y).shift(1), (k / z).shift(1), a.shift(1),
              (a / y).shift(1), (a / z).shift(1), k.shift(1)})
          need_poch_den(x, 1, "series denominator");
      },
      [](const Bindings& bs, long long order) {
        QMonomial a = bv(bs, "a"), k = bv(bs, "k"), y = bv(bs, "y"),
                  z = bv(bs, "z");
        return build_to_order(order, [&](long long w) {
          return g_series(a, k, y, z, 1, w) * g_series(k, a, y, z, 1, w);
        });
      },
      [](const Bindings&, long long order) {
        return LaurentSeries::one(order);
      },
      "a, k, y, z nonzero; a, k != 1; all series denominators nonvanishing");

  // f as a four-term Lambert combination.
  add_rep_case(
      out, "f-lambert", "Kernel series as a four-term Lambert combination",
      "wpeq5", {"lemma", "lambert"},
      {{"a", rat(2)}, {"k", rat(3)}, {"z", rat(5)}}, {"a", "k", "z"},
      [](const Bindings& bs) {
        QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z");
        need_unitfree(k, "k");
        need_poch_den(k.shift(1), 1, "q k; q");
        need_poch_den((k / z).shift(1), 1, "q k/z; q");
        need_poch_den(a.shift(1), 1, "q a; q");
        need_lambert(k, 1, "k");
        need_lambert(a / z, 1, "a/z");
        need_lambert(a, 1, "a");
        need_lambert(k / z, 1, "k/z");
      },
      [](const Bindings& bs, long long order) {
        return f_series(bv(bs, "a"), bv(bs, "k"), bv(bs, "z"), 1, order);
      },
      [](const Bindings& bs, long long order) {
        return f_lambert_form(bv(bs, "a"), bv(bs, "k"), bv(bs, "z"), 1, order);
      },
      "a, k, z nonzero; k != 1; qk, qk/z, qa nonvanishing; k, a/z, a, k/z "
      "inside the Lambert region");

  // f(a,k,z,q) + f(-a,-k,z,q) = 2 f(a^2,k^2,z^2,q^2).
  add_rep_case(
      out, "f-doubling", "Kernel series parameter-doubling identity", "wpeq6",
      {"lemma"}, {{"a", rat(2)}, {"k", rat(3)}, {"z", rat(5)}}, {"a", "k", "z"},
      [](const Bindings& bs) {
        QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z");
        need_nonzero(z, "z");
        need_unitfree(k, "k");
        need_unitfree(-k, "-k");
        for (const QMonomial& x :
             {k.shift(1), (k / z).shift(1), a.shift(1), (-k).shift(1),
              ((-k) / z).shift(1), (-a).shift(1)})
          need_poch_den(x, 1, "kernel denominator");
        need_poch_den((k * k).shift(2), 2, "q^2 k^2; q^2");
        need_poch_den((k * k / (z * z)).shift(2), 2, "q^2 k^2/z^2; q^2");
        need_poch_den((a * a).shift(2), 2, "q^2 a^2; q^2");
      },
      [](const Bindings& bs, long long order) {
        QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z");
        return build_to_order(order, [&](long long w) {
          return f_series(a, k, z, 1, w) + f_series(-a, -k, z, 1, w);
        });
      },
      [](const Bindings& bs, long long order) {
        QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z");
        return f_series(a * a, k * k, z * z, 2, order).times(rat(2));
      },
      "a, k, z nonzero; k != 1, -1; kernel denominators at (a,k), (-a,-k) "
      "and the squared parameters nonvanishing");

  // f(a,k,z) - f(1/a,1/k,1/z) in closed form.
  add_rep_case(
      out, "f-closed", "Kernel series inversion difference in closed form",
      "wpeq7", {"lemma"}, {{"a", rat(2)}, {"k", rat(3)}, {"z", rat(5)}},
      {"a", "k", "z"},
      [](const Bindings& bs) {
        QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z");
        validate_closed_form(a, k, z);
        need_poch_den(k.shift(1), 1, "q k; q");
        need_poch_den(a.shift(1), 1, "q a; q");
        need_poch_den((z / k).shift(1), 1, "q z/k; q");
        need_poch_den((z / a).shift(1), 1, "q z/a; q");
      },
      [](const Bindings& bs, long long order) {
        QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z");
        return build_to_order(order, [&](long long w) {
          return f_series(a, k, z, 1, w) -
                 f_series(a.inverse(), k.inverse(), z.inverse(), 1, w);
        });
      },
      [](const Bindings& bs, long long order) {
        return f_closed_form(bv(bs, "a"), bv(bs, "k"), bv(bs, "z"), 1, order);
      },
      "a, k, z nonzero; a, k != 1; a, k != z; closed-form products "
      "nonvanishing");

  // Two explicit sums whose difference is the same closed form.
  add_rep_case(
      out, "wpeq7a", "Two-sum form of the inversion difference", "wpeq7a",
      {"wp", "lemma"}, {{"a", rat(2)}, {"k", rat(3)}, {"z", rat(5)}},
      {"a", "k", "z"},
      [](const Bindings& bs) {
        QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z");
        validate_closed_form(a, k, z);
        need_poch_den(k.shift(1), 1, "q k; q");
        need_poch_den(a.shift(1), 1, "q a; q");
        need_poch_den((k / z).shift(1), 1, "q k/z; q");
        need_poch_den((z / k).shift(1), 1, "q z/k; q");
        need_poch_den((z / a).shift(1), 1, "q z/a; q");
        need_poch_den((a / z).shift(1), 1, "q a/z; q");
      },
      [](const Bindings& bs, long long order) {
        QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z");
        LaurentSeries s1 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = vwp_ratio(k, 1, n, w) *
                              poch_multi({k, z, k / a}, 1, n, w) *
                              poch_finite(qm(1), 1, n - 1, w);
          LaurentSeries den = poch_multi(
              {k.shift(1), a.shift(1), (k / z).shift(1), qm(1)}, 1, n, w);
          return (num * den.inverse(w)).times(powq(a / z, n, n));
        });
        LaurentSeries s2 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num =
              vwp_ratio(k.inverse(), 1, n, w) *
              poch_multi({k.inverse(), z.inverse(), a / k}, 1, n, w) *
              poch_finite(qm(1), 1, n - 1, w);
          LaurentSeries den = poch_multi({k.inverse().shift(1),
                                          a.inverse().shift(1),
                                          (z / k).shift(1), qm(1)},
                                         1, n, w);
          return (num * den.inverse(w)).times(powq(z / a, n, n));
        });
        return s1 - s2;
      },
      [](const Bindings& bs, long long order) {
        return f_closed_form(bv(bs, "a"), bv(bs, "k"), bv(bs, "z"), 1, order);
      },
      "a, k, z nonzero; a, k != 1; a, k != z; all sum and closed-form "
      "denominators nonvanishing");

  // Product form of the reciprocal series.
  add_rep_case(
      out, "prod6phi5", "Product evaluation of the reciprocal series",
      "prod6phi5", {"lemma", "classical"},
      {{"a", rat(2)}, {"k", rat(3)}, {"y", rat(5)}, {"z", rat(7)}},
      {"a", "k", "y", "z"},
      [](const Bindings& bs) {
        QMonomial a = bv(bs, "a"), k = bv(bs, "k"), y = bv(bs, "y"),
                  z = bv(bs, "z");
        need_nonzero(y, "y");
        need_nonzero(z, "z");
        need_unitfree(k, "k");
        need_nonzero(a, "a");
        for (const QMonomial& x :
             {(k / y).shift(1), (k / z).shift(1), a.shift(1),
              (a / (y * z)).shift(1)})
          need_poch_den(x, 1, "series/product denominator");
      },
      [](const Bindings& bs, long long order) {
        return g_product(bv(bs, "a"), bv(bs, "k"), bv(bs, "y"), bv(bs, "z"), 1,
                         order);
      },
      [](const Bindings& bs, long long order) {
        return g_series(bv(bs, "a"), bv(bs, "k"), bv(bs, "y"), bv(bs, "z"), 1,
                        order);
      },
      "a, k, y, z nonzero; k != 1; qk/y, qk/z, qa, qa/yz nonvanishing");
}

void add_cor_singh(vector<IdentityCase>& out) {
  IdentityCase cs;
  cs.id = "cor-singh";
  cs.title = "Explicit four-sum inversion difference, quotient-pair kernel";
  cs.paper_eq = "wpeq9";
  cs.tags = {"wp"};
  cs.constraints =
      "a, k, z, p1, p2 nonzero; a, k != 1; a, k != z; aq/p1, aq/p2, q/(a p1), "
      "q/(a p2), k p1 p2/a, a p1 p2/k and closed-form products nonvanishing";
  cs.defaults = {{"a", rat(2)}, {"k", rat(3)}, {"z", rat(5)},
                 {"p1", rat(7)}, {"p2", rat(11)}};
  cs.randomizable = {"a", "k", "z", "p1", "p2"};
  cs.validate = [](const Bindings& bs) {
    QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z"),
              p1 = bv(bs, "p1"), p2 = bv(bs, "p2");
    validate_closed_form(a, k, z);
    need_nonzero(p1, "p1");
    need_nonzero(p2, "p2");
    for (const QMonomial& x :
         {k.shift(1), (k / z).shift(1), a.shift(1), (a / z).shift(1),
          k.inverse().shift(1), (z / k).shift(1), a.inverse().shift(1),
          (z / a).shift(1), (a / p1).shift(1), (a / p2).shift(1),
          (a * p1).inverse().shift(1), (a * p2).inverse().shift(1)})
      need_poch_den(x, 1, "sum denominator");
    need_poch_den(k * p1 * p2 / a, 1, "k p1 p2/a; q");
    need_poch_den(a * p1 * p2 / k, 1, "a p1 p2/k; q");
  };
  cs.lhs = [](const Bindings& bs, long long order) {
    QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z"),
              p1 = bv(bs, "p1"), p2 = bv(bs, "p2");
    LaurentSeries s1 = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries num =
          vwp_ratio(k, 1, n, w) *
          poch_multi({z, k, k * p1 / a, k * p2 / a, (a / (p1 * p2)).shift(1)},
                     1, n, w) *
          poch_finite(qm(1), 1, n - 1, w);
      LaurentSeries den = poch_multi(
          {k.shift(1), (k / z).shift(1), (a / p1).shift(1), (a / p2).shift(1),
           k * p1 * p2 / a, qm(1)},
          1, n, w);
      return (num * den.inverse(w)).times(powq(a / z, n, n));
    });
    LaurentSeries s2 = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries num =
          vwp_ratio(k.inverse(), 1, n, w) *
          poch_multi({z.inverse(), k.inverse(), a * p1 / k, a * p2 / k,
                      (a * p1 * p2).inverse().shift(1)},
                     1, n, w) *
          poch_finite(qm(1), 1, n - 1, w);
      LaurentSeries den = poch_multi(
          {k.inverse().shift(1), (z / k).shift(1),
           (a * p1).inverse().shift(1), (a * p2).inverse().shift(1),
           a * p1 * p2 / k, qm(1)},
          1, n, w);
      return (num * den.inverse(w)).times(powq(z / a, n, n));
    });
    LaurentSeries s3 = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries num =
          vwp_ratio(a, 1, n, w) *
          poch_multi({a, p1, p2, (a * a / (k * p1 * p2)).shift(1), z}, 1, n,
                     w) *
          poch_finite(qm(1), 1, n - 1, w);
      LaurentSeries den = poch_multi(
          {(a / p1).shift(1), (a / p2).shift(1), k * p1 * p2 / a, a.shift(1),
           (a / z).shift(1), qm(1)},
          1, n, w);
      return (num * den.inverse(w)).times(powq(k / z, n, n));
    });
    LaurentSeries s4 = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries num =
          vwp_ratio(a.inverse(), 1, n, w) *
          poch_multi({a.inverse(), p1, p2,
                      (k / (a * a * p1 * p2)).shift(1), z.inverse()},
                     1, n, w) *
          poch_finite(qm(1), 1, n - 1, w);
      LaurentSeries den = poch_multi(
          {(a * p1).inverse().shift(1), (a * p2).inverse().shift(1),
           a * p1 * p2 / k, a.inverse().shift(1), (z / a).shift(1), qm(1)},
          1, n, w);
      return (num * den.inverse(w)).times(powq(z / k, n, n));
    });
    return s1 - s2 - s3 + s4;
  };
  cs.rhs = [](const Bindings& bs, long long order) {
    return f_closed_form(bv(bs, "a"), bv(bs, "k"), bv(bs, "z"), 1, order);
  };
  out.push_back(std::move(cs));
}

void add_cor_ab(vector<IdentityCase>& out) {
  IdentityCase cs;
  cs.id = "cor-ab";
  cs.title = "Explicit four-sum inversion difference, double-length kernel";
  cs.paper_eq = "wpeq90";
  cs.tags = {"wp"};
  cs.constraints =
      "a, k, z nonzero; a, k != 1; a, k != z; k, 1/k (length 2n), a^2q^2/k, "
      "kq^2/a^2 and closed-form products nonvanishing";
  cs.defaults = {{"a", rat(2)}, {"k", rat(3)}, {"z", rat(5)}};
  cs.randomizable = {"a", "k", "z"};
  cs.validate = [](const Bindings& bs) {
    QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z");
    validate_closed_form(a, k, z);
    for (const QMonomial& x :
         {k.shift(1), (k / z).shift(1), a.shift(1), (a / z).shift(1),
          k.inverse().shift(1), (z / k).shift(1), a.inverse().shift(1),
          (z / a).shift(1), (a * a / k).shift(2), (k / (a * a)).shift(2)})
      need_poch_den(x, 1, "sum denominator");
  };
  cs.lhs = [](const Bindings& bs, long long order) {
    QMonomial a = bv(bs, "a"), k = bv(bs, "k"), z = bv(bs, "z");
    LaurentSeries s1 = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries num =
          vwp_ratio(k, 1, n, w) * poch_finite(z, 1, n, w) *
          poch_finite((k * k / (a * a)).shift(-1), 1, n, w) *
          poch_finite(qm(1), 1, n - 1, w);
      LaurentSeries den =
          poch_multi({k.shift(1), (k / z).shift(1), qm(1)}, 1, n, w);
      return (num * den.inverse(w)).times(powq(a / z, n, n));
    });
    LaurentSeries s2 = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries num =
          vwp_ratio(k.inverse(), 1, n, w) * poch_finite(z.inverse(), 1, n, w) *
          poch_finite((a * a / (k * k)).shift(-1), 1, n, w) *
          poch_finite(qm(1), 1, n - 1, w);
      LaurentSeries den = poch_multi(
          {k.inverse().shift(1), (z / k).shift(1), qm(1)}, 1, n, w);
      return (num * den.inverse(w)).times(powq(z / a, n, n));
    });
    LaurentSeries s3 = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries num =
          vwp_ratio(a, 1, n, w) *
          poch_multi({a, z, (k / a).shift(-1)}, 1, n, w) *
          poch_finite((a * a / k).shift(1), 1, 2 * n, w) *
          poch_finite(qm(1), 1, n - 1, w);
      LaurentSeries den =
          poch_multi({a.shift(1), (a / z).shift(1), (a * a / k).shift(2),
                      qm(1)},
                     1, n, w) *
          poch_finite(k, 1, 2 * n, w);
      return (num * den.inverse(w)).times(powq(k / z, n, n));
    });
    LaurentSeries s4 = asum(order, 1, [&](long long n, long long w) {
      LaurentSeries num =
          vwp_ratio(a.inverse(), 1, n, w) *
          poch_multi({a.inverse(), z.inverse(), (a / k).shift(-1)}, 1, n, w) *
          poch_finite((k / (a * a)).shift(1), 1, 2 * n, w) *
          poch_finite(qm(1), 1, n - 1, w);
      LaurentSeries den =
          poch_multi({a.inverse().shift(1), (z / a).shift(1),
                      (k / (a * a)).shift(2), qm(1)},
                     1, n, w) *
          poch_finite(k.inverse(), 1, 2 * n, w);
      return (num * den.inverse(w)).times(powq(z / k, n, n));
    });
    return s1 - s2 - s3 + s4;
  };
  cs.rhs = [](const Bindings& bs, long long order) {
    return f_closed_form(bv(bs, "a"), bv(bs, "k"), bv(bs, "z"), 1, order);
  };
  out.push_back(std::move(cs));
}

void add_rep_agreements(vector<IdentityCase>& out) {
  auto simple_ak_validate = [](const Bindings& bs) {
    QMonomial a = bv(bs, "a"), z = bv(bs, "z");
    need_nonzero(z, "z");
    need_unitfree(a, "a");
    need_poch_den(a.shift(1), 1, "q a; q");
    need_poch_den((a / z).shift(1), 1, "q a/z; q");
  };
  add_rep_case(
      out, "f1-reps", "First limit kernel: weighted vs plain series", "wpeq10",
      {"reps"}, {{"a", rat(2)}, {"z", rat(5)}}, {"a", "z"}, simple_ak_validate,
      [](const Bindings& bs, long long order) {
        return f1_series(bv(bs, "a"), bv(bs, "z"), 1, order);
      },
      [](const Bindings& bs, long long order) {
        return f1_simple(bv(bs, "a"), bv(bs, "z"), 1, order);
      },
      "a, z nonzero; a != 1; qa, qa/z nonvanishing");
  add_rep_case(
      out, "f1-reps-lambert", "First limit kernel: series vs Lambert form",
      "wpeq10", {"reps", "lambert"}, {{"a", rat(2)}, {"z", rat(5)}},
      {"a", "z"},
      [](const Bindings& bs) {
        QMonomial a = bv(bs, "a"), z = bv(bs, "z");
        need_poch_den(a.shift(1), 1, "q a; q");
        need_lambert(a, 1, "a");
        need_lambert(a / z, 1, "a/z");
      },
      [](const Bindings& bs, long long order) {
        return f1_simple(bv(bs, "a"), bv(bs, "z"), 1, order);
      },
      [](const Bindings& bs, long long order) {
        return f1_lambert(bv(bs, "a"), bv(bs, "z"), 1, order);
      },
      "a, z nonzero; qa nonvanishing; a and a/z inside the Lambert region");

  auto simple_a_validate = [](const Bindings& bs) {
    QMonomial a = bv(bs, "a");
    need_unitfree(a, "a");
    need_poch_den(a.shift(1), 1, "q a; q");
  };
  add_rep_case(
      out, "f2-reps", "Second limit kernel: weighted vs plain series",
      "wpeq11", {"reps"}, {{"a", rat(2)}}, {"a"}, simple_a_validate,
      [](const Bindings& bs, long long order) {
        return f2_series(bv(bs, "a"), 1, order);
      },
      [](const Bindings& bs, long long order) {
        return f2_simple(bv(bs, "a"), 1, order);
      },
      "a nonzero; a != 1; qa nonvanishing");
  add_rep_case(
      out, "f2-reps-lambert", "Second limit kernel: series vs Lambert form",
      "wpeq11", {"reps", "lambert"}, {{"a", rat(2)}}, {"a"},
      [](const Bindings& bs) {
        QMonomial a = bv(bs, "a");
        need_poch_den(a.shift(1), 1, "q a; q");
        need_lambert(a, 1, "a");
      },
      [](const Bindings& bs, long long order) {
        return f2_simple(bv(bs, "a"), 1, order);
      },
      [](const Bindings& bs, long long order) {
        return f2_lambert(bv(bs, "a"), 1, order);
      },
      "a nonzero inside the Lambert region; qa nonvanishing");

  add_rep_case(
      out, "f3-reps", "Third limit kernel: weighted vs plain series",
      "wpeq12", {"reps"}, {{"a", rat(2)}}, {"a"},
      [](const Bindings& bs) {
        QMonomial a = bv(bs, "a");
        need_unitfree(a, "a");
        need_poch_den(a.shift(1), 1, "q a; q");
        need_poch_den((a * a).shift(2), 2, "q^2 a^2; q^2");
      },
      [](const Bindings& bs, long long order) {
        return f3_series(bv(bs, "a"), 1, order);
      },
      [](const Bindings& bs, long long order) {
        return f3_simple(bv(bs, "a"), 1, order);
      },
      "a nonzero; a != 1; qa and q^2a^2 nonvanishing");
  add_rep_case(
      out, "f3-reps-lambert", "Third limit kernel: series vs Lambert form",
      "wpeq12", {"reps", "lambert"}, {{"a", rat(2)}}, {"a"},
      [](const Bindings& bs) {
        QMonomial a = bv(bs, "a");
        need_poch_den(a.shift(1), 1, "q a; q");
        need_lambert(a, 1, "a");
      },
      [](const Bindings& bs, long long order) {
        return f3_simple(bv(bs, "a"), 1, order);
      },
      [](const Bindings& bs, long long order) {
        return f3_lambert(bv(bs, "a"), 1, order);
      },
      "a nonzero inside the Lambert region; qa nonvanishing");

  add_rep_case(
      out, "La-reps", "Lambert series: very-well-poised representation",
      "laeq", {"lambert", "reps"}, {{"a", rat(2)}}, {"a"},
      [](const Bindings& bs) {
        QMonomial a = bv(bs, "a");
        need_lambert(a, 1, "a");
        need_poch_den(a.shift(1), 1, "q a; q");
      },
      [](const Bindings& bs, long long order) {
        return lambert(bv(bs, "a"), 1, order);
      },
      [](const Bindings& bs, long long order) {
        return la_vwp(bv(bs, "a"), 1, order);
      },
      "a nonzero inside the Lambert region; qa nonvanishing");
  add_rep_case(
      out, "La-reps-2", "Lambert series: alternating-sum representation",
      "laeq", {"lambert", "reps"}, {{"a", rat(2)}}, {"a"},
      [](const Bindings& bs) {
        QMonomial a = bv(bs, "a");
        need_lambert(a, 1, "a");
        need_poch_den(a.shift(1), 1, "q a; q");
      },
      [](const Bindings& bs, long long order) {
        return lambert(bv(bs, "a"), 1, order);
      },
      [](const Bindings& bs, long long order) {
        return la_alt(bv(bs, "a"), 1, order);
      },
      "a nonzero inside the Lambert region; qa nonvanishing");
  add_rep_case(
      out, "La-claq2", "Lambert series: weighted sum under inverse product",
      "laeq2", {"lambert", "reps"}, {{"a", rat(2)}}, {"a"},
      [](const Bindings& bs) {
        QMonomial a = bv(bs, "a");
        need_lambert(a, 1, "a");
        need_poch_den(a.shift(1), 1, "q a; q");
      },
      [](const Bindings& bs, long long order) {
        return lambert(bv(bs, "a"), 1, order);
      },
      [](const Bindings& bs, long long order) {
        return la_weighted_inv(bv(bs, "a"), 1, order);
      },
      "a nonzero inside the Lambert region; qa nonvanishing");
  add_rep_case(
      out, "La-claq2-2", "Lambert series: weighted sum times product",
      "laeq2", {"lambert", "reps"}, {{"a", rat(2)}}, {"a"},
      [](const Bindings& bs) {
        QMonomial a = bv(bs, "a");
        need_lambert(a, 1, "a");
      },
      [](const Bindings& bs, long long order) {
        return lambert(bv(bs, "a"), 1, order);
      },
      [](const Bindings& bs, long long order) {
        return la_weighted(bv(bs, "a"), 1, order);
      },
      "a nonzero inside the Lambert region");
}

// ---------------------------------------------------------------------------
// Theta-quotient cases at fixed Laurent bindings.

void add_theta_cases(vector<IdentityCase>& out) {
  // Cubic lattice count as a two-term Lambert combination.
  add_rep_case(
      out, "aq-entry", "Cubic lattice theta as a Lambert combination",
      "corlameq2", {"theta", "lambert"}, {}, {},
      [](const Bindings&) {},
      [](const Bindings&, long long order) { return borwein_a(order); },
      [](const Bindings&, long long order) {
        return build_to_order(order, [&](long long w) {
          return LaurentSeries::one(w) +
                 (lambert(qm(-2), 3, w) - lambert(qm(-1), 3, w))
                     .times(rat(6));
        });
      },
      "none (fixed bindings)", 40);

  // Same lattice count against the two explicit q-series displays.
  add_rep_case(
      out, "aq-cor", "Cubic lattice theta: alternating-series display",
      "corlameq1", {"theta"}, {}, {}, [](const Bindings&) {},
      [](const Bindings&, long long order) { return borwein_a(order); },
      [](const Bindings&, long long order) {
        LaurentSeries s1 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries den = poch_finite(qm(1), 3, n, w)
                                  .times_one_minus(qm(3 * n));
          return den.inverse(w).times(alt(n, -6, (3 * n * n - n) / 2));
        });
        LaurentSeries s2 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries den = poch_finite(qm(2), 3, n, w)
                                  .times_one_minus(qm(3 * n));
          return den.inverse(w).times(alt(n, 6, (3 * n * n + n) / 2));
        });
        return build_to_order(order, [&](long long w) {
          return LaurentSeries::one(w) + s1 + s2;
        });
      },
      "none (fixed bindings)", 30);
  add_rep_case(
      out, "aq-cor-2", "Cubic lattice theta: very-well-poised display",
      "corlameq1", {"theta"}, {}, {}, [](const Bindings&) {},
      [](const Bindings&, long long order) { return borwein_a(order); },
      [](const Bindings&, long long order) {
        LaurentSeries s1 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = LaurentSeries::one_minus(qm(6 * n - 2), w);
          LaurentSeries den = LaurentSeries::one_minus(qm(3 * n - 2), w)
                                  .times_one_minus(qm(3 * n));
          return (num * den.inverse(w))
              .times(QMonomial(Rational(6), 3 * n * n - 2 * n));
        });
        LaurentSeries s2 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = LaurentSeries::one_minus(qm(6 * n - 1), w);
          LaurentSeries den = LaurentSeries::one_minus(qm(3 * n - 1), w)
                                  .times_one_minus(qm(3 * n));
          return (num * den.inverse(w))
              .times(QMonomial(Rational(-6), 3 * n * n - n));
        });
        return build_to_order(order, [&](long long w) {
          return LaurentSeries::one(w) + s1 + s2;
        });
      },
      "none (fixed bindings)", 30);

  // Fully explicit four-sum display with two free denominators.
  add_rep_case(
      out, "aq-slater", "Cubic lattice theta: two-parameter four-sum display",
      "aqcdeq", {"theta"}, {{"c", rat(2)}, {"d", rat(3)}}, {"c", "d"},
      [](const Bindings& bs) {
        QMonomial c = bv(bs, "c"), d = bv(bs, "d");
        need_nonzero(c, "c");
        need_nonzero(d, "d");
        for (long long e : {1, 2}) {
          need_poch_den(qm(e) / c, 3, "q^e/c; q^3");
          need_poch_den(qm(e) / d, 3, "q^e/d; q^3");
        }
      },
      [](const Bindings&, long long order) { return borwein_a(order); },
      [](const Bindings& bs, long long order) {
        QMonomial c = bv(bs, "c"), d = bv(bs, "d");
        LaurentSeries s1 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = poch_finite(qm(3), 3, n - 1, w) *
                              poch_finite(qm(2) / (c * d), 3, n, w);
          LaurentSeries den =
              poch_multi({qm(2) / c, qm(2) / d, qm(3)}, 3, n, w);
          return (num * den.inverse(w))
              .times(alt(n, 6, (3 * n * n + n) / 2));
        });
        LaurentSeries s2 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = poch_finite(qm(3), 3, n - 1, w) *
                              poch_finite(qm(1) / (c * d), 3, n, w);
          LaurentSeries den =
              poch_multi({qm(1) / c, qm(1) / d, qm(3)}, 3, n, w);
          return (num * den.inverse(w))
              .times(alt(n, -6, (3 * n * n - n) / 2));
        });
        LaurentSeries s3 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = vwp_ratio(qm(-1), 3, n, w) *
                              poch_finite(qm(3), 3, n - 1, w) *
                              poch_multi({qm(-1), c, d}, 3, n, w);
          LaurentSeries den = poch_multi(
              {qm(2) / c, qm(2) / d, qm(2), qm(3)}, 3, n, w);
          return (num * den.inverse(w))
              .times(powq((c * d).inverse(), n, 3 * n * n + n) * rat(-6));
        });
        LaurentSeries s4 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = vwp_ratio(qm(-2), 3, n, w) *
                              poch_finite(qm(3), 3, n - 1, w) *
                              poch_multi({qm(-2), c, d}, 3, n, w);
          LaurentSeries den = poch_multi(
              {qm(1) / c, qm(1) / d, qm(1), qm(3)}, 3, n, w);
          return (num * den.inverse(w))
              .times(powq((c * d).inverse(), n, 3 * n * n - n) * rat(6));
        });
        return build_to_order(order, [&](long long w) {
          return LaurentSeries::one(w) + s1 + s2 + s3 + s4;
        });
      },
      "c, d nonzero; q/c, q^2/c, q/d, q^2/d nonvanishing on base q^3", 30);

  // The c, d -> infinity limit of the previous display.
  add_rep_case(
      out, "aq-slater-limit", "Cubic lattice theta: limiting four-sum display",
      "aqcdeq", {"theta"}, {}, {}, [](const Bindings&) {},
      [](const Bindings&, long long order) { return borwein_a(order); },
      [](const Bindings&, long long order) {
        LaurentSeries s1 = asum(order, 1, [&](long long n, long long w) {
          return LaurentSeries::one_minus(qm(3 * n), w)
              .inverse(w)
              .times(alt(n, 6, (3 * n * n + n) / 2));
        });
        LaurentSeries s2 = asum(order, 1, [&](long long n, long long w) {
          return LaurentSeries::one_minus(qm(3 * n), w)
              .inverse(w)
              .times(alt(n, -6, (3 * n * n - n) / 2));
        });
        LaurentSeries s3 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = LaurentSeries::one_minus(qm(6 * n - 1), w);
          LaurentSeries den = LaurentSeries::one_minus(qm(3 * n - 1), w)
                                  .times_one_minus(qm(3 * n));
          return (num * den.inverse(w))
              .times(QMonomial(Rational(-6), 6 * n * n - 2 * n));
        });
        LaurentSeries s4 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = LaurentSeries::one_minus(qm(6 * n - 2), w);
          LaurentSeries den = LaurentSeries::one_minus(qm(3 * n - 2), w)
                                  .times_one_minus(qm(3 * n));
          return (num * den.inverse(w))
              .times(QMonomial(Rational(6), 6 * n * n - 4 * n));
        });
        return build_to_order(order, [&](long long w) {
          return LaurentSeries::one(w) + s1 + s2 + s3 + s4;
        });
      },
      "none (fixed bindings)", 30);

  // Square of the even theta as a Lambert combination and two displays.
  add_rep_case(
      out, "phi2-lambert", "Squared theta as a Lambert combination",
      "corlam2", {"theta", "lambert"}, {}, {}, [](const Bindings&) {},
      [](const Bindings&, long long order) {
        return build_to_order(
            order, [&](long long w) { return theta_phi(qm(1), w).pow(2); });
      },
      [](const Bindings&, long long order) {
        return build_to_order(order, [&](long long w) {
          return LaurentSeries::one(w) +
                 (lambert(qm(-3), 4, w) - lambert(qm(-1), 4, w))
                     .times(rat(4));
        });
      },
      "none (fixed bindings)", 40);
  add_rep_case(
      out, "phi2-cor", "Squared theta: alternating-series display",
      "corlam2", {"theta"}, {}, {}, [](const Bindings&) {},
      [](const Bindings&, long long order) {
        return build_to_order(
            order, [&](long long w) { return theta_phi(qm(1), w).pow(2); });
      },
      [](const Bindings&, long long order) {
        LaurentSeries s1 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries den = poch_finite(qm(1), 4, n, w)
                                  .times_one_minus(qm(4 * n));
          return den.inverse(w).times(alt(n, -4, 2 * n * n - n));
        });
        LaurentSeries s2 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries den = poch_finite(qm(3), 4, n, w)
                                  .times_one_minus(qm(4 * n));
          return den.inverse(w).times(alt(n, 4, 2 * n * n + n));
        });
        return build_to_order(order, [&](long long w) {
          return LaurentSeries::one(w) + s1 + s2;
        });
      },
      "none (fixed bindings)", 30);
  add_rep_case(
      out, "phi2-cor-2", "Squared theta: very-well-poised display",
      "corlam2", {"theta"}, {}, {}, [](const Bindings&) {},
      [](const Bindings&, long long order) {
        return build_to_order(
            order, [&](long long w) { return theta_phi(qm(1), w).pow(2); });
      },
      [](const Bindings&, long long order) {
        LaurentSeries s1 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = LaurentSeries::one_minus(qm(8 * n - 3), w);
          LaurentSeries den = LaurentSeries::one_minus(qm(4 * n - 3), w)
                                  .times_one_minus(qm(4 * n));
          return (num * den.inverse(w))
              .times(QMonomial(Rational(4), 4 * n * n - 3 * n));
        });
        LaurentSeries s2 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = LaurentSeries::one_minus(qm(8 * n - 1), w);
          LaurentSeries den = LaurentSeries::one_minus(qm(4 * n - 1), w)
                                  .times_one_minus(qm(4 * n));
          return (num * den.inverse(w))
              .times(QMonomial(Rational(-4), 4 * n * n - n));
        });
        return build_to_order(order, [&](long long w) {
          return LaurentSeries::one(w) + s1 + s2;
        });
      },
      "none (fixed bindings)", 30);
  add_rep_case(
      out, "phi2-cd", "Squared theta: two-parameter four-sum display",
      "corlam2eq2", {"theta"}, {{"c", rat(2)}, {"d", rat(3)}}, {"c", "d"},
      [](const Bindings& bs) {
        QMonomial c = bv(bs, "c"), d = bv(bs, "d");
        need_nonzero(c, "c");
        need_nonzero(d, "d");
        for (long long e : {1, 3}) {
          need_poch_den(qm(e) / c, 4, "q^e/c; q^4");
          need_poch_den(qm(e) / d, 4, "q^e/d; q^4");
        }
      },
      [](const Bindings&, long long order) {
        return build_to_order(
            order, [&](long long w) { return theta_phi(qm(1), w).pow(2); });
      },
      [](const Bindings& bs, long long order) {
        QMonomial c = bv(bs, "c"), d = bv(bs, "d");
        LaurentSeries s1 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = poch_finite(qm(4), 4, n - 1, w) *
                              poch_finite(qm(3) / (c * d), 4, n, w);
          LaurentSeries den =
              poch_multi({qm(3) / c, qm(3) / d, qm(4)}, 4, n, w);
          return (num * den.inverse(w)).times(alt(n, 4, 2 * n * n + n));
        });
        LaurentSeries s2 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = poch_finite(qm(4), 4, n - 1, w) *
                              poch_finite(qm(1) / (c * d), 4, n, w);
          LaurentSeries den =
              poch_multi({qm(1) / c, qm(1) / d, qm(4)}, 4, n, w);
          return (num * den.inverse(w)).times(alt(n, -4, 2 * n * n - n));
        });
        LaurentSeries s3 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = vwp_ratio(qm(-1), 4, n, w) *
                              poch_finite(qm(4), 4, n - 1, w) *
                              poch_multi({qm(-1), c, d}, 4, n, w);
          LaurentSeries den = poch_multi(
              {qm(3) / c, qm(3) / d, qm(3), qm(4)}, 4, n, w);
          return (num * den.inverse(w))
              .times(powq((c * d).inverse(), n, 4 * n * n + 2 * n) * rat(-4));
        });
        LaurentSeries s4 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = vwp_ratio(qm(-3), 4, n, w) *
                              poch_finite(qm(4), 4, n - 1, w) *
                              poch_multi({qm(-3), c, d}, 4, n, w);
          LaurentSeries den = poch_multi(
              {qm(1) / c, qm(1) / d, qm(1), qm(4)}, 4, n, w);
          return (num * den.inverse(w))
              .times(powq((c * d).inverse(), n, 4 * n * n - 2 * n) * rat(4));
        });
        return build_to_order(order, [&](long long w) {
          return LaurentSeries::one(w) + s1 + s2 + s3 + s4;
        });
      },
      "c, d nonzero; q/c, q^3/c, q/d, q^3/d nonvanishing on base q^4", 30);
  add_rep_case(
      out, "phi2-limit", "Squared theta: limiting four-sum display",
      "corlam2eq22", {"theta"}, {}, {}, [](const Bindings&) {},
      [](const Bindings&, long long order) {
        return build_to_order(
            order, [&](long long w) { return theta_phi(qm(1), w).pow(2); });
      },
      [](const Bindings&, long long order) {
        LaurentSeries s1 = asum(order, 1, [&](long long n, long long w) {
          return LaurentSeries::one_minus(qm(4 * n), w)
              .inverse(w)
              .times(alt(n, 4, 2 * n * n + n));
        });
        LaurentSeries s2 = asum(order, 1, [&](long long n, long long w) {
          return LaurentSeries::one_minus(qm(4 * n), w)
              .inverse(w)
              .times(alt(n, -4, 2 * n * n - n));
        });
        LaurentSeries s3 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = LaurentSeries::one_minus(qm(8 * n - 1), w);
          LaurentSeries den = LaurentSeries::one_minus(qm(4 * n - 1), w)
                                  .times_one_minus(qm(4 * n));
          return (num * den.inverse(w))
              .times(QMonomial(Rational(-4), 8 * n * n - 2 * n));
        });
        LaurentSeries s4 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = LaurentSeries::one_minus(qm(8 * n - 3), w);
          LaurentSeries den = LaurentSeries::one_minus(qm(4 * n - 3), w)
                                  .times_one_minus(qm(4 * n));
          return (num * den.inverse(w))
              .times(QMonomial(Rational(4), 8 * n * n - 6 * n));
        });
        return build_to_order(order, [&](long long w) {
          return LaurentSeries::one(w) + s1 + s2 + s3 + s4;
        });
      },
      "none (fixed bindings)", 30);

  // Odd theta cube ratio as an odd-part Lambert combination and displays.
  auto psi_ratio = [](const Bindings&, long long order) {
    return build_to_order(order, [&](long long w) {
      return (theta_psi(qm(3), w).pow(3) * theta_psi(qm(1), w).inverse(w))
          .times(qm(1));
    });
  };
  add_rep_case(
      out, "psi-entry", "Odd theta cube ratio as an odd Lambert combination",
      "psieq1", {"theta", "lambert"}, {}, {}, [](const Bindings&) {},
      psi_ratio,
      [](const Bindings&, long long order) {
        return build_to_order(order, [&](long long w) {
          return lambert_odd(qm(-2), 3, w) - lambert_odd(qm(-1), 3, w);
        });
      },
      "none (fixed bindings)", 40);
  add_rep_case(
      out, "psi-cor1", "Odd theta cube ratio: very-well-poised display",
      "cpsieq1", {"theta"}, {}, {}, [](const Bindings&) {}, psi_ratio,
      [](const Bindings&, long long order) {
        LaurentSeries s1 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = LaurentSeries::one_minus(qm(6 * n - 2), w) *
                              poch_finite(-qm(3), 3, n - 1, w);
          LaurentSeries den = LaurentSeries::one_minus(qm(3 * n - 2), w)
                                  .times_one_minus(qm(3 * n)) *
                              poch_finite(-qm(1), 3, n, w);
          return (num * den.inverse(w))
              .times(QMonomial(Rational(1), (3 * n * n - n) / 2));
        });
        LaurentSeries s2 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = LaurentSeries::one_minus(qm(6 * n - 1), w) *
                              poch_finite(-qm(3), 3, n - 1, w);
          LaurentSeries den = LaurentSeries::one_minus(qm(3 * n - 1), w)
                                  .times_one_minus(qm(3 * n)) *
                              poch_finite(-qm(2), 3, n, w);
          return (num * den.inverse(w))
              .times(QMonomial(Rational(-1), (3 * n * n + n) / 2));
        });
        return s1 + s2;
      },
      "none (fixed bindings)", 30);
  add_rep_case(
      out, "psi-cor1-2", "Odd theta cube ratio: alternating-series display",
      "cpsieq1", {"theta"}, {}, {}, [](const Bindings&) {}, psi_ratio,
      [](const Bindings&, long long order) {
        LaurentSeries s1 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = poch_finite(-qm(3), 3, n - 1, w);
          LaurentSeries den =
              poch_finite(qm(2), 3, n, w).times_one_minus(qm(3 * n));
          return (num * den.inverse(w)).times(alt(n, 1, 2 * n));
        });
        LaurentSeries s2 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = poch_finite(-qm(3), 3, n - 1, w);
          LaurentSeries den =
              poch_finite(qm(1), 3, n, w).times_one_minus(qm(3 * n));
          return (num * den.inverse(w)).times(alt(n, -1, n));
        });
        return s1 + s2;
      },
      "none (fixed bindings)", 30);
  add_rep_case(
      out, "psi-d", "Odd theta cube ratio: one-parameter four-sum display",
      "psieq3", {"theta"}, {{"d", rat(5)}}, {"d"},
      [](const Bindings& bs) {
        QMonomial d = bv(bs, "d");
        need_nonzero(d, "d");
        need_poch_den(qm(2) / d, 3, "q^2/d; q^3");
        need_poch_den(qm(1) / d, 3, "q/d; q^3");
        need_poch_den(qm(4) / d, 6, "q^4/d; q^6");
        need_poch_den(qm(5) / d, 6, "q^5/d; q^6");
      },
      psi_ratio,
      [](const Bindings& bs, long long order) {
        QMonomial d = bv(bs, "d");
        LaurentSeries s1 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = poch_finite(qm(6), 6, n - 1, w) *
                              poch_finite(qm(2) / d, 6, n, w);
          LaurentSeries den = poch_finite(qm(2), 6, n, w) *
                              poch_multi({qm(2) / d, qm(3)}, 3, n, w);
          return (num * den.inverse(w)).times(alt(n, 1, 2 * n));
        });
        LaurentSeries s2 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = poch_finite(qm(6), 6, n - 1, w) *
                              poch_finite(qm(1) / d, 6, n, w);
          LaurentSeries den = poch_finite(qm(1), 6, n, w) *
                              poch_multi({qm(1) / d, qm(3)}, 3, n, w);
          return (num * den.inverse(w)).times(alt(n, -1, n));
        });
        LaurentSeries s3 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = vwp_ratio(qm(-2), 6, n, w) *
                              poch_finite(qm(6), 6, 2 * n - 1, w) *
                              poch_multi({qm(-2), d}, 6, n, w);
          LaurentSeries den = poch_finite(qm(2), 6, 2 * n, w) *
                              poch_multi({qm(4) / d, qm(6)}, 6, n, w);
          return (num * den.inverse(w))
              .times(powq(d.inverse(), n, 6 * n * n));
        });
        LaurentSeries s4 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = vwp_ratio(qm(-1), 6, n, w) *
                              poch_finite(qm(6), 6, 2 * n - 1, w) *
                              poch_multi({qm(-1), d}, 6, n, w);
          LaurentSeries den = poch_finite(qm(4), 6, 2 * n, w) *
                              poch_multi({qm(5) / d, qm(6)}, 6, n, w);
          return (num * den.inverse(w))
              .times(powq(d.inverse(), n, 6 * n * n + 3 * n) * rat(-1));
        });
        return s1 + s2 + s3 + s4;
      },
      "d nonzero; q/d, q^2/d (base q^3) and q^4/d, q^5/d (base q^6) "
      "nonvanishing",
      30);
  add_rep_case(
      out, "psi-limit", "Odd theta cube ratio: limiting four-sum display",
      "psieq4", {"theta"}, {}, {}, [](const Bindings&) {}, psi_ratio,
      [](const Bindings&, long long order) {
        LaurentSeries s1 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries den =
              poch_finite(qm(2), 6, n, w) * poch_finite(qm(3), 3, n, w);
          return (poch_finite(qm(6), 6, n - 1, w) * den.inverse(w))
              .times(alt(n, 1, 2 * n));
        });
        LaurentSeries s2 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries den =
              poch_finite(qm(1), 6, n, w) * poch_finite(qm(3), 3, n, w);
          return (poch_finite(qm(6), 6, n - 1, w) * den.inverse(w))
              .times(alt(n, -1, n));
        });
        LaurentSeries s3 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = vwp_ratio(qm(-2), 6, n, w) *
                              poch_finite(qm(6), 6, 2 * n - 1, w) *
                              poch_finite(qm(-2), 6, n, w);
          LaurentSeries den = poch_finite(qm(2), 6, 2 * n, w) *
                              poch_finite(qm(6), 6, n, w);
          return (num * den.inverse(w))
              .times(alt(n, 1, 9 * n * n - 3 * n));
        });
        LaurentSeries s4 = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num = vwp_ratio(qm(-1), 6, n, w) *
                              poch_finite(qm(6), 6, 2 * n - 1, w) *
                              poch_finite(qm(-1), 6, n, w);
          LaurentSeries den = poch_finite(qm(4), 6, 2 * n, w) *
                              poch_finite(qm(6), 6, n, w);
          return (num * den.inverse(w)).times(alt(n, -1, 9 * n * n));
        });
        return s1 + s2 + s3 + s4;
      },
      "none (fixed bindings)", 30);

  // Cubic theta quotient, its Lambert form, and two weighted-sum displays.
  auto phi_cubic_ratio = [](const Bindings&, long long order) {
    return build_to_order(order, [&](long long w) {
      return theta_phi(-qm(1), w).pow(3) * theta_phi(-qm(3), w).inverse(w);
    });
  };
  add_rep_case(
      out, "phi-cubic", "Cubic theta quotient as a Lambert combination",
      "thetaeq2", {"theta", "lambert"}, {}, {}, [](const Bindings&) {},
      phi_cubic_ratio,
      [](const Bindings&, long long order) {
        return build_to_order(order, [&](long long w) {
          return LaurentSeries::one(w) +
                 (lambert(-qm(-2), 3, w) - lambert(-qm(-1), 3, w))
                     .times(rat(6));
        });
      },
      "none (fixed bindings)", 40);
  add_rep_case(
      out, "phi-cubic-q1", "Cubic theta quotient: inverse-product display",
      "thetaeq2", {"theta"}, {}, {}, [](const Bindings&) {}, phi_cubic_ratio,
      [](const Bindings&, long long order) {
        return build_to_order(order, [&](long long w) {
          LaurentSeries s1 = sum_terms(
              1,
              [&](long long n) {
                return poch_finite(qm(3), 3, n, w)
                    .inverse(w)
                    .times(QMonomial(Rational(n), (3 * n * n - n) / 2));
              },
              w);
          LaurentSeries s2 = sum_terms(
              1,
              [&](long long n) {
                return poch_finite(qm(3), 3, n, w)
                    .inverse(w)
                    .times(QMonomial(Rational(n), (3 * n * n + n) / 2));
              },
              w);
          return LaurentSeries::one(w) -
                 (poch_infinite(-qm(1), 3, w).inverse(w) * s1).times(rat(6)) +
                 (poch_infinite(-qm(2), 3, w).inverse(w) * s2).times(rat(6));
        });
      },
      "none (fixed bindings)", 40);
  add_rep_case(
      out, "phi-cubic-q2", "Cubic theta quotient: product-weighted display",
      "thetaeq2", {"theta"}, {}, {}, [](const Bindings&) {}, phi_cubic_ratio,
      [](const Bindings&, long long order) {
        return build_to_order(order, [&](long long w) {
          LaurentSeries s1 = sum_terms(
              1,
              [&](long long n) {
                return poch_finite(qm(3), 3, n, w)
                    .inverse(w)
                    .times(QMonomial(Rational(n % 2 ? -n : n), n));
              },
              w);
          LaurentSeries s2 = sum_terms(
              1,
              [&](long long n) {
                return poch_finite(qm(3), 3, n, w)
                    .inverse(w)
                    .times(QMonomial(Rational(n % 2 ? -n : n), 2 * n));
              },
              w);
          return LaurentSeries::one(w) +
                 (poch_infinite(-qm(1), 3, w) * s1).times(rat(6)) -
                 (poch_infinite(-qm(2), 3, w) * s2).times(rat(6));
        });
      },
      "none (fixed bindings)", 40);
}

// ---------------------------------------------------------------------------
// Classical summations used as external anchors.

void add_classical_cases(vector<IdentityCase>& out) {
  // Bilateral very-well-poised summation.
  add_rep_case(
      out, "6psi6", "Bilateral very-well-poised summation",
      "baileyeq1", {"classical"},
      {{"a", rat(2)}, {"b", rat(3)}, {"c", rat(5)}, {"d", rat(7)},
       {"e", rat(11)}},
      {"a", "b", "c", "d", "e"},
      [](const Bindings& bs) {
        QMonomial a = bv(bs, "a"), b = bv(bs, "b"), c = bv(bs, "c"),
                  d = bv(bs, "d"), e = bv(bs, "e");
        need_unitfree(a, "a");
        for (const QMonomial& x : {b, c, d, e}) need_nonzero(x, "b,c,d,e");
        for (const QMonomial& x :
             {(a / b).shift(1), (a / c).shift(1), (a / d).shift(1),
              (a / e).shift(1), b.inverse().shift(1), c.inverse().shift(1),
              d.inverse().shift(1), e.inverse().shift(1),
              (a * a / (b * c * d * e)).shift(1)})
          need_poch_den(x, 1, "summation denominator");
      },
      [](const Bindings& bs, long long order) {
        QMonomial a = bv(bs, "a"), b = bv(bs, "b"), c = bv(bs, "c"),
                  d = bv(bs, "d"), e = bv(bs, "e");
        return poch_inf_ratio(
            {a.shift(1), (a / (b * c)).shift(1), (a / (b * d)).shift(1),
             (a / (b * e)).shift(1), (a / (c * d)).shift(1),
             (a / (c * e)).shift(1), (a / (d * e)).shift(1), qm(1),
             a.inverse().shift(1)},
            {(a / b).shift(1), (a / c).shift(1), (a / d).shift(1),
             (a / e).shift(1), b.inverse().shift(1), c.inverse().shift(1),
             d.inverse().shift(1), e.inverse().shift(1),
             (a * a / (b * c * d * e)).shift(1)},
            1, order);
      },
      [](const Bindings& bs, long long order) {
        QMonomial a = bv(bs, "a"), b = bv(bs, "b"), c = bv(bs, "c"),
                  d = bv(bs, "d"), e = bv(bs, "e");
        QMonomial arg = a * a / (b * c * d * e);
        LaurentSeries plus = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num =
              vwp_ratio(a, 1, n, w) * poch_multi({b, c, d, e}, 1, n, w);
          LaurentSeries den =
              poch_multi({(a / b).shift(1), (a / c).shift(1),
                          (a / d).shift(1), (a / e).shift(1)},
                         1, n, w);
          return (num * den.inverse(w)).times(powq(arg, n, n));
        });
        LaurentSeries minus = asum(order, 1, [&](long long n, long long w) {
          LaurentSeries num =
              vwp_ratio(a.inverse(), 1, n, w) *
              poch_multi({b / a, c / a, d / a, e / a}, 1, n, w);
          LaurentSeries den = poch_multi(
              {b.inverse().shift(1), c.inverse().shift(1),
               d.inverse().shift(1), e.inverse().shift(1)},
              1, n, w);
          return (num * den.inverse(w)).times(powq(arg, n, n));
        });
        return build_to_order(order, [&](long long w) {
          return LaurentSeries::one(w) + plus + minus;
        });
      },
      "a, b, c, d, e nonzero; a != 1; aq/b..aq/e, q/b..q/e, qa^2/bcde "
      "nonvanishing",
      30);

  // Unilateral very-well-poised summation.
  add_rep_case(
      out, "6phi5", "Unilateral very-well-poised summation", "6phi5",
      {"classical"},
      {{"a", rat(3)}, {"b", rat(2)}, {"c", rat(5)}, {"d", rat(7)}},
      {"a", "b", "c", "d"},
      [](const Bindings& bs) {
        QMonomial a = bv(bs, "a"), b = bv(bs, "b"), c = bv(bs, "c"),
                  d = bv(bs, "d");
        need_unitfree(a, "a");
        for (const QMonomial& x : {b, c, d}) need_nonzero(x, "b,c,d");
        for (const QMonomial& x :
             {(a / b).shift(1), (a / c).shift(1), (a / d).shift(1),
              (a / (b * c * d)).shift(1)})
          need_poch_den(x, 1, "summation denominator");
      },
      [](const Bindings& bs, long long order) {
        QMonomial a = bv(bs, "a"), b = bv(bs, "b"), c = bv(bs, "c"),
                  d = bv(bs, "d");
        QMonomial arg = a / (b * c * d);
        return asum(order, 0, [&](long long n, long long w) {
          LaurentSeries num =
              vwp_ratio(a, 1, n, w) * poch_multi({a, b, c, d}, 1, n, w);
          LaurentSeries den =
              poch_multi({qm(1), (a / b).shift(1), (a / c).shift(1),
                          (a / d).shift(1)},
                         1, n, w);
          return (num * den.inverse(w)).times(powq(arg, n, n));
        });
      },
      [](const Bindings& bs, long long order) {
        QMonomial a = bv(bs, "a"), b = bv(bs, "b"), c = bv(bs, "c"),
                  d = bv(bs, "d");
        return poch_inf_ratio(
            {a.shift(1), (a / (b * c)).shift(1), (a / (b * d)).shift(1),
             (a / (c * d)).shift(1)},
            {(a / b).shift(1), (a / c).shift(1), (a / d).shift(1),
             (a / (b * c * d)).shift(1)},
            1, order);
      },
      "a, b, c, d nonzero; a != 1; aq/b, aq/c, aq/d, aq/bcd nonvanishing",
      30);

  // q-binomial theorem and its two limiting evaluations.
  add_rep_case(
      out, "qbin", "Binomial product evaluation", "qbintheo", {"classical"},
      {{"a", rat(3)}, {"z", QMonomial(Rational(2), 1)}}, {"a"},
      [](const Bindings& bs) {
        QMonomial z = bv(bs, "z");
        need(z.e >= 1, "z must carry a positive power of q");
        need_poch_den(z, 1, "z; q");
      },
      [](const Bindings& bs, long long order) {
        QMonomial a = bv(bs, "a"), z = bv(bs, "z");
        return asum(order, 0, [&](long long n, long long w) {
          return (poch_finite(a, 1, n, w) *
                  poch_finite(qm(1), 1, n, w).inverse(w))
              .times(powq(z, n, 0));
        });
      },
      [](const Bindings& bs, long long order) {
        QMonomial a = bv(bs, "a"), z = bv(bs, "z");
        return poch_inf_ratio({a * z}, {z}, 1, order);
      },
      "z = c q^e with e >= 1; z nonvanishing as a denominator base", 30);
  add_rep_case(
      out, "qbin-a0", "Inverse-product generating sum", "bineqab",
      {"classical"}, {{"z", QMonomial(Rational(2), 1)}}, {},
      [](const Bindings& bs) {
        QMonomial z = bv(bs, "z");
        need(z.e >= 1, "z must carry a positive power of q");
        need_poch_den(z, 1, "z; q");
      },
      [](const Bindings& bs, long long order) {
        QMonomial z = bv(bs, "z");
        return asum(order, 0, [&](long long n, long long w) {
          return poch_finite(qm(1), 1, n, w).inverse(w).times(powq(z, n, 0));
        });
      },
      [](const Bindings& bs, long long order) {
        return build_to_order(order, [&](long long w) {
          return poch_infinite(bv(bs, "z"), 1, w).inverse(w);
        });
      },
      "z = c q^e with e >= 1", 30);
  add_rep_case(
      out, "qbin-euler", "Alternating product generating sum", "bineqab",
      {"classical"}, {{"z", rat(2)}}, {"z"},
      [](const Bindings& bs) { need(bv(bs, "z").e >= 0, "z exponent >= 0"); },
      [](const Bindings& bs, long long order) {
        QMonomial z = bv(bs, "z");
        return asum(order, 0, [&](long long n, long long w) {
          return poch_finite(qm(1), 1, n, w)
              .inverse(w)
              .times(powq(-z, n, n * (n - 1) / 2));
        });
      },
      [](const Bindings& bs, long long order) {
        return poch_infinite(bv(bs, "z"), 1, order);
      },
      "z = c q^e with e >= 0", 30);

  // Negative-length product consistency: (z;q)_{-n} (z q^{-n};q)_inf = (z;q)_inf.
  add_rep_case(
      out, "qneg-consistency", "Negative-length product consistency", "qneg",
      {"classical"}, {{"z", rat(5)}}, {"z"},
      [](const Bindings& bs) {
        QMonomial z = bv(bs, "z");
        need_nonzero(z, "z");
        need_poch_den(z.inverse().shift(1), 1, "q/z; q");
        need_poch_den(z.shift(-3), 1, "z q^{-3}; q");
      },
      [](const Bindings& bs, long long order) {
        QMonomial z = bv(bs, "z");
        return build_to_order(order, [&](long long w) {
          return poch_negative(z, 1, 3, w) *
                 poch_infinite(z.shift(-3), 1, w);
        });
      },
      [](const Bindings& bs, long long order) {
        return poch_infinite(bv(bs, "z"), 1, order);
      },
      "z nonzero; q/z and z q^{-3} nonvanishing", 30);
}

// ---------------------------------------------------------------------------

vector<IdentityCase> build_catalog() {
  vector<IdentityCase> out;
  WPFamily singh = singh_family();
  WPFamily ab = ab_family();
  BaileyFamily unit = unit_family();
  BaileyFamily triv = trivial_family();
  BaileyFamily slater = slater_family();
  BaileyFamily msz = msz_family();

  add_wpeq(out, "wpeq", "quotient", singh,
           {{"a", rat(2)}, {"k", rat(3)}, {"p1", rat(5)}, {"p2", rat(7)},
            {"y", rat(11)}, {"z", rat(13)}},
           {"a", "k", "y", "z", "p1", "p2"});
  add_wpeq(out, "wpeq-ab", "double-length", ab,
           {{"a", rat(2)}, {"k", rat(3)}, {"y", rat(5)}, {"z", rat(7)}},
           {"a", "k", "y", "z"});

  add_lemma_p1(out, "lemma-p1", "quotient", singh,
               {{"a", rat(2)}, {"k", rat(3)}, {"z", rat(5)}, {"p1", rat(7)},
                {"p2", rat(11)}},
               {"a", "k", "z", "p1", "p2"});
  add_lemma_p1(out, "lemma-p1-ab", "double-length", ab,
               {{"a", rat(2)}, {"k", rat(3)}, {"z", rat(5)}},
               {"a", "k", "z"});

  add_kernel_lemmas(out);

  add_thm1(out, "thm1", "quotient", singh,
           {{"a", rat(2)}, {"k", rat(3)}, {"z", rat(5)}, {"p1", rat(7)},
            {"p2", rat(11)}},
           {"a", "k", "z", "p1", "p2"});
  add_thm1(out, "thm1-ab", "double-length", ab,
           {{"a", rat(2)}, {"k", rat(3)}, {"z", rat(5)}}, {"a", "k", "z"});

  add_thm2(out, "thm2", "quotient", singh,
           {{"a", rat(2)}, {"k", rat(3)}, {"z", rat(5)}, {"p1", rat(7)},
            {"p2", rat(11)}},
           {"a", "k", "z", "p1", "p2"});
  add_thm2(out, "thm2-ab", "double-length", ab,
           {{"a", rat(2)}, {"k", rat(3)}, {"z", rat(5)}}, {"a", "k", "z"});

  add_cor_singh(out);
  add_cor_ab(out);

  add_cor_c33(out, "cor-c33", "unit", unit,
              {{"a", rat(2)}, {"z", rat(5)}}, {"a", "z"});
  add_cor_c33(out, "cor-c33-trivial", "trivial", triv,
              {{"a", rat(2)}, {"z", rat(5)}}, {"a", "z"});
  add_cor_c33(out, "cor-c33-slater", "product-quotient", slater,
              {{"a", rat(2)}, {"z", rat(5)}, {"c", rat(3)}, {"d", rat(7)}},
              {"a", "z", "c", "d"});

  add_thm_t2(out, "thm-t2", "unit", unit, F1Rep::series,
             {{"a", rat(2)}, {"z", rat(5)}}, {"a", "z"});
  add_thm_t2(out, "thm-t2-trivial", "trivial", triv, F1Rep::simple,
             {{"a", rat(2)}, {"z", rat(5)}}, {"a", "z"});
  add_thm_t2(out, "thm-t2-msz", "split-index", msz, F1Rep::lambert,
             {{"a", rat(2)}, {"z", rat(5)}, {"d", rat(3)}}, {"a", "z", "d"});

  add_cor_c4(out, "cor-c4", "unit", unit, false, {{"a", rat(2)}}, {"a"});
  add_cor_c4(out, "cor-c4-trivial", "trivial", triv, true, {{"a", rat(2)}},
             {"a"});

  add_cor_cz1(out, "cor-cz1", "unit", unit, false, {{"a", rat(2)}}, {"a"});
  add_cor_cz1(out, "cor-cz1-trivial", "trivial", triv, true, {{"a", rat(2)}},
              {"a"});

  add_rep_agreements(out);

  add_aq_general(out, "aq-general", "unit", unit, {}, {});
  add_aq_general(out, "aq-general-trivial", "trivial", triv, {}, {});
  add_aq_general(out, "aq-general-slater", "product-quotient", slater,
                 {{"c", rat(2)}, {"d", rat(3)}}, {"c", "d"});

  add_psi_general(out, "psi-general", "unit", unit, {}, {});
  add_psi_general(out, "psi-general-trivial", "trivial", triv, {}, {});

  add_la_pair(out, "La-pair", "unit", unit, {{"a", rat(2)}}, {"a"});
  add_la_pair(out, "La-pair-trivial", "trivial", triv, {{"a", rat(2)}},
              {"a"});

  add_peq(out, "peq", "unit", unit, {{"a", rat(2)}, {"y", rat(5)}},
          {"a", "y"});
  add_peq(out, "peq-trivial", "trivial", triv,
          {{"a", rat(2)}, {"y", rat(5)}}, {"a", "y"});

  add_theta_cases(out);
  add_classical_cases(out);

  std::sort(out.begin(), out.end(),
            [](const IdentityCase& x, const IdentityCase& y) {
              return x.id < y.id;
            });
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i - 1].id == out[i].id)
      throw std::logic_error("duplicate case id: " + out[i].id);
  return out;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

const vector<IdentityCase>& catalog() {
  static const vector<IdentityCase> cases = build_catalog();
  return cases;
}

const IdentityCase* find_case(const std::string& id) {
  const auto& cs = catalog();
  auto it = std::lower_bound(
      cs.begin(), cs.end(), id,
      [](const IdentityCase& c, const std::string& key) { return c.id < key; });
  return (it != cs.end() && it->id == id) ? &*it : nullptr;
}

vector<const IdentityCase*> cases_with_tag(const std::string& tag) {
  vector<const IdentityCase*> out;
  for (const auto& c : catalog())
    if (std::find(c.tags.begin(), c.tags.end(), tag) != c.tags.end())
      out.push_back(&c);
  return out;
}

Bindings merged_bindings(const IdentityCase& c, const Bindings& overrides) {
  Bindings bs = c.defaults;
  for (const auto& [name, value] : overrides) {
    auto it = bs.find(name);
    if (it != bs.end()) it->second = value;
  }
  return bs;
}

CaseOutcome run_case(const IdentityCase& c, const Bindings& overrides,
                     std::optional<long long> order) {
  CaseOutcome out;
  out.id = c.id;
  out.paper_eq = c.paper_eq;
  out.bindings = merged_bindings(c, overrides);
  out.order = order.value_or(c.default_order);
  auto start = std::chrono::steady_clock::now();
  try {
    if (c.validate) c.validate(out.bindings);
    LaurentSeries lhs = c.lhs(out.bindings, out.order);
    LaurentSeries rhs = c.rhs(out.bindings, out.order);
    out.result = compare_to_order(lhs, rhs, out.order);
  } catch (const degenerate_error& e) {
    out.result.status = CheckResult::Status::degenerate;
    out.result.requested_order = out.order;
    out.result.matched_order = -1;
    out.result.detail = e.what();
  } catch (const guard_error& e) {
    out.result.status = CheckResult::Status::degenerate;
    out.result.requested_order = out.order;
    out.result.matched_order = -1;
    out.result.detail = e.what();
  } catch (const std::domain_error& e) {
    out.result.status = CheckResult::Status::degenerate;
    out.result.requested_order = out.order;
    out.result.matched_order = -1;
    out.result.detail = e.what();
  }
  auto stop = std::chrono::steady_clock::now();
  out.millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
          .count();
  return out;
}

vector<CaseOutcome> run_cases(const vector<const IdentityCase*>& sel,
                              const Bindings& overrides,
                              std::optional<long long> order,
                              unsigned threads) {
  vector<CaseOutcome> out(sel.size());
  if (sel.empty()) return out;
  unsigned workers = threads ? threads : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(sel.size()));
  std::atomic<size_t> next{0};
  auto drain = [&]() {
    for (size_t i = next.fetch_add(1); i < sel.size(); i = next.fetch_add(1))
      out[i] = run_case(*sel[i], overrides, order);
  };
  if (workers == 1) {
    drain();
    return out;
  }
  vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(drain);
  for (auto& th : pool) th.join();
  return out;
}

Bindings random_prime_bindings(const IdentityCase& c,
                               unsigned long long seed) {
  if (c.randomizable.empty()) return c.defaults;
  static const long long primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                     29, 31, 37, 41, 43, 47, 53, 59, 61,
                                     67, 71, 73, 79, 83, 89, 97};
  constexpr int kPrimes = sizeof(primes) / sizeof(primes[0]);
  std::mt19937_64 rng(seed ^ fnv1a(c.id));
  std::uniform_int_distribution<int> pick(0, kPrimes - 1);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Bindings bs = c.defaults;
    vector<long long> used;
    bool ok = true;
    for (const std::string& name : c.randomizable) {
      long long p = 0;
      for (int tries = 0; tries < 200; ++tries) {
        long long cand = primes[pick(rng)];
        if (std::find(used.begin(), used.end(), cand) == used.end()) {
          p = cand;
          break;
        }
      }
      if (p == 0) {
        ok = false;
        break;
      }
      used.push_back(p);
      bs[name] = QMonomial(Rational(p), 0);
    }
    if (!ok) continue;
    try {
      if (c.validate) c.validate(bs);
      return bs;
    } catch (const degenerate_error&) {
    } catch (const std::domain_error&) {
    }
  }
  throw degenerate_error("no admissible random binding found for " + c.id);
}

IdentityCase negative_control(const IdentityCase& c, long long exponent) {
  IdentityCase control = c;
  control.id = c.id + "-negative-control";
  control.title = c.title + " (right side deliberately perturbed)";
  auto inner = c.rhs;
  control.rhs = [inner, exponent](const Bindings& bs, long long order) {
    return build_to_order(order, [&](long long w) {
      return inner(bs, w).times_one_minus(QMonomial(Rational(-1), exponent),
                                          w);
    });
  };
  return control;
}

}  // namespace qwp
