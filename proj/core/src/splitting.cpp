#include "amitsur/splitting.hpp"

#include <algorithm>
#include <optional>

#include "amitsur/errors.hpp"
#include "amitsur/number_theory.hpp"

namespace amitsur {

std::shared_ptr<const Splitting> Splitting::make(EtaleAlgebraPtr f) {
  return std::shared_ptr<const Splitting>(new Splitting(std::move(f)));
}

Splitting::Splitting(EtaleAlgebraPtr f) : f_(std::move(f)) {
  std::optional<Integer> d;
  struct Pending {
    Rational half_b, s;  // roots -b/2 ± s·√D
  };
  std::vector<std::pair<std::size_t, Pending>> quadratic;
  for (const auto& pf : f_->factors()) {
    const Polynomial& q = pf.factor;
    if (q.degree() == 1) {
      roots_.push_back(FieldElem::rational(-q.coeff(0)));
      rational_.push_back(true);
      sigma_.push_back(roots_.size() - 1);
      continue;
    }
    if (q.degree() != 2) throw UnsupportedDegree("P has an irreducible factor of degree " + std::to_string(q.degree()));
    const Rational b = q.coeff(1), c = q.coeff(0);
    const Rational disc = b * b - 4 * c;
    const Integer num = disc.get_num(), den = disc.get_den();
    const auto [s, r] = squarefree_decomposition(num * den);
    if (d && *d != r) throw UnsupportedDegree("quadratic factors of P define different fields");
    d = r;
    // √disc = (s/den)·√r
    const Rational half_s = Rational(s) / den / 2;
    const std::size_t at = roots_.size();
    quadratic.emplace_back(at, Pending{-b / 2, half_s});
    roots_.emplace_back();
    roots_.emplace_back();
    rational_.push_back(false);
    rational_.push_back(false);
    sigma_.push_back(at + 1);
    sigma_.push_back(at);
  }
  const Integer dk = d ? *d : Integer(1);
  if (d) k_ = std::make_shared<const QuadraticField>(dk);
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (rational_[i]) roots_[i] = FieldElem::rational(roots_[i].a(), dk);
  for (const auto& [at, pr] : quadratic) {
    roots_[at] = FieldElem(pr.half_b, pr.s, dk);
    roots_[at + 1] = FieldElem(pr.half_b, -pr.s, dk);
  }
}

const Splitting::Level& Splitting::level(unsigned n) const {
  if (n > max_level) throw UnsupportedDegree("tensor level above " + std::to_string(max_level));
  std::call_once(once_[n], [&] {
    Level& lv = levels_[n];
    const std::size_t nr = roots_.size();
    // Canonical root tuples in lexicographic order: the first irrational entry is a "+" root.
    std::vector<std::size_t> t(n + 1, 0);
    for (;;) {
      bool canonical = true, quad = false;
      for (std::size_t j : t)
        if (!rational_[j]) {
          canonical = sigma_[j] > j;
          quad = true;
          break;
        }
      if (canonical) lv.components.push_back(Component{t, quad});
      std::size_t k = n + 1;
      while (k > 0 && ++t[k - 1] == nr) t[--k] = 0;
      if (k == 0) break;
    }

    const std::size_t dd = f_->degree();
    std::size_t size = 1;
    for (unsigned j = 0; j <= n; ++j) size *= dd;
    // powers[r][e] = ρ_r^e
    std::vector<std::vector<FieldElem>> powers(nr);
    for (std::size_t r = 0; r < nr; ++r) {
      powers[r].push_back(FieldElem::rational(1, roots_[r].D()));
      for (std::size_t e = 1; e < dd; ++e) powers[r].push_back(powers[r].back() * roots_[r]);
    }
    lv.projection = RationalMatrix(size, size);
    std::vector<unsigned> ex(n + 1);
    for (std::size_t idx = 0; idx < size; ++idx) {
      std::size_t rest = idx;
      for (unsigned j = n + 1; j-- > 0;) {
        ex[j] = static_cast<unsigned>(rest % dd);
        rest /= dd;
      }
      std::size_t row = 0;
      for (const auto& comp : lv.components) {
        FieldElem v = powers[comp.roots[0]][ex[0]];
        for (unsigned j = 1; j <= n; ++j) v = v * powers[comp.roots[j]][ex[j]];
        lv.projection(row, idx) = v.a();
        if (comp.quadratic) lv.projection(row + 1, idx) = v.b();
        row += comp.dimension();
      }
    }
    lv.lift = inverse(lv.projection);
  });
  return levels_[n];
}

const std::vector<Component>& Splitting::components(unsigned n) const { return level(n).components; }
const RationalMatrix& Splitting::projection_matrix(unsigned n) const { return level(n).projection; }

std::vector<FieldElem> Splitting::project(const TensorElement& a) const {
  const Level& lv = level(a.level());
  const Integer dk = k_ ? k_->D() : Integer(1);
  const std::vector<Rational> flat = lv.projection.apply(a.coeffs());
  std::vector<FieldElem> out;
  std::size_t row = 0;
  for (const auto& comp : lv.components) {
    if (comp.quadratic) {
      out.emplace_back(flat[row], flat[row + 1], dk);
    } else {
      out.push_back(FieldElem::rational(flat[row], dk));
    }
    row += comp.dimension();
  }
  return out;
}

TensorElement Splitting::lift(unsigned n, const std::vector<FieldElem>& values) const {
  const Level& lv = level(n);
  if (values.size() != lv.components.size()) throw DimensionMismatch("one value per component expected");
  std::vector<Rational> flat;
  for (std::size_t c = 0; c < values.size(); ++c) {
    flat.push_back(values[c].a());
    if (lv.components[c].quadratic) {
      flat.push_back(values[c].b());
    } else if (values[c].b() != 0) {
      throw InvalidInput("irrational value on a rational component");
    }
  }
  return TensorElement(f_, n, lv.lift.apply(flat));
}

std::size_t Splitting::find(unsigned n, const std::vector<std::size_t>& roots) const {
  const auto& comps = components(n);
  auto it = std::lower_bound(comps.begin(), comps.end(), roots,
                             [](const Component& c, const std::vector<std::size_t>& r) { return c.roots < r; });
  if (it == comps.end() || it->roots != roots) throw InconsistentPresentation("root tuple is not canonical");
  return static_cast<std::size_t>(it - comps.begin());
}

ComponentMap Splitting::face(unsigned n, unsigned i) const {
  if (i > n + 1) throw InvalidInput("face index out of range");
  ComponentMap map{n, n + 1, {}};
  for (const auto& comp : components(n + 1)) {
    std::vector<std::size_t> t = comp.roots;
    t.erase(t.begin() + i);
    bool conj = false;
    for (std::size_t j : t)
      if (!rational_[j]) {
        conj = sigma_[j] < j;
        break;
      }
    if (conj)
      for (auto& j : t) j = sigma_[j];
    map.links.push_back({find(n, t), conj});
  }
  return map;
}

ComponentMap Splitting::identity(unsigned n) const {
  ComponentMap map{n, n, {}};
  for (std::size_t c = 0; c < components(n).size(); ++c) map.links.push_back({c, false});
  return map;
}

FieldElem Splitting::apply(const ComponentLink& link, const std::vector<FieldElem>& source) const {
  const FieldElem& v = source.at(link.source);
  return link.conj ? v.conj() : v;
}

std::vector<SplitComponent> split_components(const EtaleAlgebraPtr& f, unsigned n) {
  const SplittingPtr s = Splitting::make(f);
  const RationalMatrix& pm = s->projection_matrix(n);
  std::vector<SplitComponent> out;
  std::size_t row = 0;
  for (const auto& comp : s->components(n)) {
    RationalMatrix rows(comp.dimension(), pm.cols());
    for (std::size_t r = 0; r < comp.dimension(); ++r)
      for (std::size_t c = 0; c < pm.cols(); ++c) rows(r, c) = pm(row + r, c);
    out.push_back({comp, comp.quadratic ? s->field() : nullptr, std::move(rows)});
    row += comp.dimension();
  }
  return out;
}

}  // namespace amitsur
