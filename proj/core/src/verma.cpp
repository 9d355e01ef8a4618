#include "vira/verma.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace vira {

VermaVector::VermaVector(Scalar c, Scalar h, PartitionVector terms)
    : c_(std::move(c)), h_(std::move(h)), terms_(std::move(terms)) {}

VermaVector VermaVector::highest_weight(const Scalar& c, const Scalar& h) {
  return basis(c, h, Partition{});
}

VermaVector VermaVector::basis(const Scalar& c, const Scalar& h, const Partition& p,
                               const Scalar& coeff) {
  return VermaVector(c, h, PartitionVector::basis(p, coeff));
}

void VermaVector::require_same_module(const VermaVector& o) const {
  if (c_ != o.c_ || h_ != o.h_) {
    throw ModuleMismatch("Verma vectors with (c,h) = (" + c_.str() + "," + h_.str() + ") and (" +
                         o.c_.str() + "," + o.h_.str() + ") cannot be combined");
  }
}

VermaVector& VermaVector::operator+=(const VermaVector& o) {
  require_same_module(o);
  terms_ += o.terms_;
  return *this;
}

VermaVector& VermaVector::operator-=(const VermaVector& o) {
  require_same_module(o);
  terms_ -= o.terms_;
  return *this;
}

void VermaVector::add_scaled(const Scalar& s, const VermaVector& o) {
  require_same_module(o);
  terms_.add_scaled(s, o.terms_);
}

namespace {

class Reorderer {
 public:
  Reorderer(const Scalar& c, const Scalar& h, ActionStats* stats) : c_(c), h_(h), stats_(stats) {}

  PartitionVector apply(Index a, const PartitionVector& v, int depth) {
    PartitionVector out;
    for (const auto& [lambda, coeff] : v) out.add_scaled(coeff, apply(a, lambda, depth));
    return out;
  }

  PartitionVector apply(Index a, const Partition& lambda, int depth) {
    if (stats_) {
      ++stats_->calls;
      stats_->max_depth = std::max(stats_->max_depth, depth);
    }
    if (lambda.empty()) {
      if (a > 0) return {};
      if (a == 0) return PartitionVector::basis(lambda, h_);
      return PartitionVector::basis(Partition{{static_cast<int>(-a)}});
    }
    const int lead = lambda.max_part();
    if (a < 0 && -a >= lead) return PartitionVector::basis(lambda.with_part(static_cast<int>(-a)));

    const Partition rest = lambda.tail();
    const Index p = lead;
    PartitionVector out = apply(-p, apply(a, rest, depth + 1), depth + 1);
    if (a + p != 0) out.add_scaled(Scalar{a + p}, apply(a - p, rest, depth + 1));
    if (a == p) {
      const Scalar sa{a};
      out.add_term(rest, (sa * sa * sa - sa) / Scalar{12} * c_);
    }
    return out;
  }

 private:
  const Scalar& c_;
  const Scalar& h_;
  ActionStats* stats_;
};

}  // namespace

VermaVector verma_L_action(Index a, const VermaVector& v, ActionStats* stats) {
  Reorderer r(v.c(), v.h(), stats);
  return VermaVector(v.c(), v.h(), r.apply(a, v.terms(), 0));
}

VermaVector verma_C_action(const VermaVector& v) { return v.c() * v; }

namespace {

std::string case_text(std::initializer_list<Index> xs, const Partition& p) {
  std::string out = "(";
  bool first = true;
  for (Index x : xs) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(x);
  }
  return out + ") on " + to_string(p);
}

}  // namespace

VerificationReport check_verma_relations(Index max_index, int max_level, const Scalar& c,
                                         const Scalar& h, const SweepOptions& opts) {
  VerificationReport report;
  report.check_name = "verma-relations";
  report.parameters["c"] = c.str();
  report.parameters["h"] = h.str();
  report.parameters["max_index"] = std::to_string(max_index);
  report.parameters["max_level"] = std::to_string(max_level);

  const auto basis = partitions_up_to(max_level);
  const auto width = static_cast<std::size_t>(2 * max_index + 1);

  std::vector<VermaVector> once(width * basis.size(), VermaVector(c, h));
  run_sweep(
      once.size(),
      [&](std::size_t i) -> std::optional<Counterexample> {
        const Index n = static_cast<Index>(i / basis.size()) - max_index;
        once[i] = verma_L_action(n, VermaVector::basis(c, h, basis[i % basis.size()]));
        return std::nullopt;
      },
      opts);
  auto first = [&](Index n, std::size_t p) -> const VermaVector& {
    return once[static_cast<std::size_t>(n + max_index) * basis.size() + p];
  };

  auto outcome = run_sweep(
      width * width * basis.size(),
      [&](std::size_t i) -> std::optional<Counterexample> {
        const std::size_t p = i % basis.size();
        const Index m = static_cast<Index>(i / basis.size() % width) - max_index;
        const Index n = static_cast<Index>(i / basis.size() / width) - max_index;
        const VermaVector v = VermaVector::basis(c, h, basis[p]);
        const VermaVector lhs = verma_L_action(n, first(m, p)) - verma_L_action(m, first(n, p));
        VermaVector rhs = Scalar{n - m} * verma_L_action(n + m, v);
        if (n + m == 0) {
          const Scalar sn{n};
          rhs.add_scaled((sn * sn * sn - sn) / Scalar{12} * c, v);
        }
        if (lhs == rhs) return std::nullopt;
        return Counterexample{case_text({n, m}, basis[p]), "[L(n), L(m)]", render_verma(rhs),
                              render_verma(lhs)};
      },
      opts);
  return apply_outcome(report, std::move(outcome));
}

VerificationReport verma_hw_check(const Scalar& c, const Scalar& h) {
  VerificationReport report;
  report.check_name = "verma-highest-weight";
  report.parameters["c"] = c.str();
  report.parameters["h"] = h.str();

  const VermaVector v = VermaVector::highest_weight(c, h);
  std::vector<std::pair<std::string, std::pair<VermaVector, VermaVector>>> cases;
  cases.push_back({"L(0)", {verma_L_action(0, v), h * v}});
  cases.push_back({"C", {verma_C_action(v), c * v}});
  for (Index n = 1; n <= 10; ++n) {
    cases.push_back({"L(" + std::to_string(n) + ")", {verma_L_action(n, v), VermaVector(c, h)}});
  }
  auto outcome = run_sweep(cases.size(), [&](std::size_t i) -> std::optional<Counterexample> {
    const auto& [name, sides] = cases[i];
    if (sides.first == sides.second) return std::nullopt;
    return Counterexample{name, name + " on |c,h>", render_verma(sides.second),
                          render_verma(sides.first)};
  });
  return apply_outcome(report, std::move(outcome));
}

namespace {

void require_fock_weight(const Scalar& alpha, const Scalar& c, const Scalar& h) {
  const Scalar want_h = alpha * alpha / Scalar{2};
  if (c != Scalar{1} || h != want_h) {
    throw UniversalMapPrecondition(
        "the map to the Fock space of charge " + alpha.str() + " exists only for c = 1 and h = alpha^2/2 = " +
        want_h.str() + ", got c = " + c.str() + ", h = " + h.str());
  }
}

FockVector map_monomial(const Scalar& alpha, const Partition& lambda) {
  FockVector out = FockVector::vacuum(alpha);
  const auto& parts = lambda.parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) out = sugawara_L(-Index{*it}, out);
  return out;
}

}  // namespace

FockVector universal_map(const Scalar& alpha, const VermaVector& v) {
  require_fock_weight(alpha, v.c(), v.h());
  FockVector out(alpha);
  for (const auto& [lambda, coeff] : v.terms()) out.add_scaled(coeff, map_monomial(alpha, lambda));
  return out;
}

VerificationReport check_intertwining(const Scalar& alpha, Index max_index, int max_level,
                                      const SweepOptions& opts) {
  VerificationReport report;
  report.check_name = "intertwining";
  report.parameters["alpha"] = alpha.str();
  report.parameters["max_index"] = std::to_string(max_index);
  report.parameters["max_level"] = std::to_string(max_level);

  const Scalar c{1};
  const Scalar h = alpha * alpha / Scalar{2};
  const auto basis = partitions_up_to(max_level);

  // Images of every monomial the sweep can reach.
  const auto reach = partitions_up_to(max_level + static_cast<int>(max_index));
  std::vector<FockVector> images(reach.size(), FockVector(alpha));
  run_sweep(
      reach.size(),
      [&](std::size_t i) -> std::optional<Counterexample> {
        images[i] = map_monomial(alpha, reach[i]);
        return std::nullopt;
      },
      opts);
  std::map<Partition, std::size_t, GradedOrder> slot;
  for (std::size_t i = 0; i < reach.size(); ++i) slot.emplace(reach[i], i);
  auto image = [&](const VermaVector& x) {
    FockVector out(alpha);
    for (const auto& [lambda, coeff] : x.terms()) out.add_scaled(coeff, images[slot.at(lambda)]);
    return out;
  };

  const auto width = static_cast<std::size_t>(2 * max_index + 1);
  auto outcome = run_sweep(
      width * basis.size(),
      [&](std::size_t i) -> std::optional<Counterexample> {
        const std::size_t p = i % basis.size();
        const Index a = static_cast<Index>(i / basis.size()) - max_index;
        const VermaVector x = VermaVector::basis(c, h, basis[p]);
        const FockVector lhs = image(verma_L_action(a, x));
        const FockVector rhs = sugawara_L(a, images[slot.at(basis[p])]);
        if (lhs == rhs) return std::nullopt;
        return Counterexample{case_text({a}, basis[p]), "u(L(a) x) vs L(a) u(x)", render_fock(rhs),
                              render_fock(lhs)};
      },
      opts);
  return apply_outcome(report, std::move(outcome));
}

std::string render_verma(const VermaVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, coeff] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    os << coeff.str() << "·";
    for (int part : lambda.parts()) os << "L(-" << part << ")";
    os << "|c,h⟩";
  }
  return os.str();
}

}  // namespace vira
