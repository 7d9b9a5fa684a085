#include "mpcmix/decomposition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mpcmix/error.hpp"

namespace mpcmix {
namespace {

SplitCertificate make_certificate(RationalVector coefficients) {
  SplitCertificate cert;
  cert.coefficients = std::move(coefficients);
  const auto& c = cert.coefficients;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j].sign() < 0) cert.group_a.push_back(j);
    if (c[j].sign() > 0) cert.group_b.push_back(j);
  }
  // Nonnegative nonzero columns cannot cancel unless both signs occur.
  if (cert.group_a.empty() || cert.group_b.empty()) {
    throw std::logic_error("null vector of a stochastic matrix has a single sign");
  }
  auto argmax = [&](const std::vector<std::size_t>& group) {
    std::size_t best = group.front();
    for (std::size_t j : group) {
      if (c[j].abs() > c[best].abs()) best = j;
    }
    return best;
  };
  cert.j_star = argmax(cert.group_a);
  cert.j_star_star = argmax(cert.group_b);
  const Rational a = c[cert.j_star].abs();
  const Rational b = c[cert.j_star_star].abs();
  cert.alpha = a / (a + b);
  return cert;
}

RationalMatrix combine(const Rational& alpha, const RationalMatrix& lhs, const RationalMatrix& rhs) {
  RationalMatrix out(lhs.rows(), lhs.cols());
  const Rational beta = Rational(1) - alpha;
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t c = 0; c < lhs.cols(); ++c) out(r, c) = alpha * lhs(r, c) + beta * rhs(r, c);
  }
  return out;
}

bool component_less(const MixtureComponent& x, const MixtureComponent& y) {
  if (x.weight != y.weight) return x.weight > y.weight;
  const auto& xa = x.component.target().atoms();
  const auto& ya = y.component.target().atoms();
  if (xa != ya) return std::lexicographical_compare(xa.begin(), xa.end(), ya.begin(), ya.end());
  const auto& xw = x.component.target().weights();
  const auto& yw = y.component.target().weights();
  return std::lexicographical_compare(xw.begin(), xw.end(), yw.begin(), yw.end());
}

}  // namespace

TransitionMatrix zero_column(const TransitionMatrix& transition, std::span<const Rational> c,
                             std::size_t j) {
  if (c.size() != transition.cols() || j >= transition.cols()) {
    throw Error("dimension", "coefficient vector or column index does not fit the transition");
  }
  if (c[j].is_zero()) {
    throw Error("zero-coefficient",
                "column " + std::to_string(j + 1) + " has a zero coefficient and cannot be zeroed");
  }
  RationalMatrix out(transition.rows(), transition.cols());
  for (std::size_t k = 0; k < transition.cols(); ++k) {
    const Rational scale = k == j ? Rational(0) : Rational(1) - c[k] / c[j];
    for (std::size_t i = 0; i < transition.rows(); ++i) {
      Rational entry = scale * transition(i, k);
      if (entry.sign() < 0 || entry > 1) {
        throw Error("out-of-range", "zeroing column " + std::to_string(j + 1) + " puts " +
                                        entry.to_string() + " at entry (" +
                                        std::to_string(i + 1) + ", " + std::to_string(k + 1) +
                                        ")");
      }
      out(i, k) = std::move(entry);
    }
  }
  return TransitionMatrix(std::move(out));
}

RationalMatrix embed_transition(const SmpcTriple& component, const DiscreteDistribution& reference) {
  const auto& ref_atoms = reference.atoms();
  const auto& atoms = component.target().atoms();
  const TransitionMatrix& f = component.transition();
  RationalMatrix out(f.rows(), ref_atoms.size());
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const auto it = std::lower_bound(ref_atoms.begin(), ref_atoms.end(), atoms[k]);
    if (it == ref_atoms.end() || *it != atoms[k]) {
      throw Error("dimension", "component atom " + atoms[k].to_string() +
                                   " is not an atom of the reference target");
    }
    const auto col = static_cast<std::size_t>(it - ref_atoms.begin());
    for (std::size_t i = 0; i < f.rows(); ++i) out(i, col) = f(i, k);
  }
  return out;
}

Split split_once(const SmpcTriple& triple) {
  const TransitionMatrix& f = triple.transition();
  auto null = null_space_vector(f.matrix());
  if (!null) {
    throw Error("no-split", "transition columns are linearly independent; no split exists");
  }
  SplitCertificate cert = make_certificate(std::move(*null));

  const TransitionMatrix f_left = zero_column(f, cert.coefficients, cert.j_star);
  const TransitionMatrix f_right = zero_column(f, cert.coefficients, cert.j_star_star);
  SmpcTriple left = apply_transition(triple.source(), f_left);
  SmpcTriple right = apply_transition(triple.source(), f_right);

  const RationalMatrix recombined =
      combine(cert.alpha, embed_transition(left, triple.target()),
              embed_transition(right, triple.target()));
  if (recombined != f.matrix()) {
    throw std::logic_error("split does not recombine to the original transition");
  }
  Rational alpha = cert.alpha;
  return {std::move(alpha), std::move(left), std::move(right), std::move(cert)};
}

Mixture decompose_full(const SmpcTriple& triple) {
  const std::size_t n = triple.source().size();
  std::vector<MixtureComponent> work{{Rational(1), triple}};
  for (;;) {
    const auto it = std::find_if(work.begin(), work.end(), [n](const MixtureComponent& m) {
      return m.component.target().size() > n;
    });
    if (it == work.end()) break;
    Split split = split_once(it->component);
    const Rational weight = it->weight;
    MixtureComponent right{weight * (Rational(1) - split.alpha), std::move(split.right)};
    *it = MixtureComponent{weight * split.alpha, std::move(split.left)};
    work.insert(it + 1, std::move(right));
  }

  Mixture out;
  for (auto& item : work) {
    auto same = std::find_if(out.components.begin(), out.components.end(),
                             [&](const MixtureComponent& m) { return m.component == item.component; });
    if (same != out.components.end()) {
      same->weight += item.weight;
    } else {
      out.components.push_back(std::move(item));
    }
  }
  std::stable_sort(out.components.begin(), out.components.end(), component_less);
  return out;
}

DiscreteDistribution recompose(const Mixture& mixture) {
  std::map<Rational, Rational> mass;
  for (const auto& [weight, component] : mixture.components) {
    const auto& target = component.target();
    for (std::size_t j = 0; j < target.size(); ++j) mass[target.atoms()[j]] += weight * target.weights()[j];
  }
  RationalVector atoms;
  RationalVector weights;
  for (auto& [atom, w] : mass) {
    if (w.is_zero()) continue;
    atoms.push_back(atom);
    weights.push_back(w);
  }
  return DiscreteDistribution(std::move(atoms), std::move(weights));
}

RationalMatrix recompose_transition(const Mixture& mixture, const DiscreteDistribution& reference) {
  if (mixture.components.empty()) throw Error("dimension", "empty mixture");
  const std::size_t rows = mixture.components.front().component.source().size();
  RationalMatrix out(rows, reference.size());
  for (const auto& [weight, component] : mixture.components) {
    const RationalMatrix embedded = embed_transition(component, reference);
    for (std::size_t i = 0; i < out.rows(); ++i) {
      for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) += weight * embedded(i, j);
    }
  }
  return out;
}

UniquenessReport verify_uniqueness(const SmpcTriple& triple) {
  const TransitionMatrix& f = triple.transition();
  const std::size_t n = triple.source().size();
  if (f.cols() != n + 1) {
    throw Error("precondition", "uniqueness check needs exactly n + 1 target atoms");
  }
  if (rank(f.matrix()) != n) {
    throw Error("precondition", "transition columns have more than one null direction");
  }
  const SplitCertificate cert = make_certificate(*null_space_vector(f.matrix()));
  const auto& c = cert.coefficients;

  UniquenessReport report;
  report.pair = {cert.j_star, cert.j_star_star};
  for (std::size_t j = 0; j < f.cols(); ++j) {
    try {
      zero_column(f, c, j);
    } catch (const Error&) {
      report.rejected.push_back(j);
      continue;
    }
    if (j == cert.j_star || j == cert.j_star_star) continue;
    const std::size_t anchor = c[j].sign() < 0 ? cert.j_star : cert.j_star_star;
    if (c[j] != c[anchor]) {
      throw std::logic_error("a third column is zeroable without tying a group maximum");
    }
    report.tied.push_back(j);
  }
  return report;
}

}  // namespace mpcmix
