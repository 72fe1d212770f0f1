#pragma once

#include <string>
#include <vector>

#include "w0/geometry/pair.hpp"
#include "w0/geometry/resolution.hpp"
#include "w0/geometry/snc.hpp"

namespace w0 {

/// KH^i = W_0 H^i of a complete variety from the nerve of a resolution (or
/// the dual complex of an SNC configuration). Over Z the result is the
/// nerve cohomology, which surjects onto the integral W_0 piece.
inline std::vector<CohomologyGroup> kh_complete(const SemisimplicialSet& nerve, Ring ring) {
  return cohomology(nerve, ring);
}

inline std::vector<std::size_t> rational_ranks(const std::vector<CohomologyGroup>& groups) {
  std::vector<std::size_t> r;
  for (const auto& g : groups) r.push_back(g.free_rank);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

/// Outcome of a theorem-backed per-degree comparison.
struct DegreeVerdict {
  std::size_t degree;
  long long expected;
  long long actual;
  bool pass;
};

struct KunnethReport {
  std::vector<std::size_t> ranks_a;
  std::vector<std::size_t> ranks_b;
  std::vector<std::size_t> ranks_product;
  std::vector<DegreeVerdict> degrees;

  bool pass() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.pass; });
  }
};

/// rank KH^i(X x Y) = sum_{j+k=i} rank KH^j(X) rank KH^k(Y), over Q.
inline KunnethReport kunneth_verify(const SncConfiguration& a, const SncConfiguration& b) {
  KunnethReport rep;
  rep.ranks_a = rational_ranks(kh_complete(dual_complex(a), Ring::Q));
  rep.ranks_b = rational_ranks(kh_complete(dual_complex(b), Ring::Q));
  rep.ranks_product = rational_ranks(kh_complete(dual_complex(product_config(a, b)), Ring::Q));

  std::vector<long long> conv(rep.ranks_a.size() + rep.ranks_b.size(), 0);
  for (std::size_t j = 0; j < rep.ranks_a.size(); ++j)
    for (std::size_t k = 0; k < rep.ranks_b.size(); ++k)
      conv[j + k] += static_cast<long long>(rep.ranks_a[j] * rep.ranks_b[k]);
  const std::size_t n = std::max(conv.size(), rep.ranks_product.size());
  for (std::size_t i = 0; i < n; ++i) {
    const long long want = i < conv.size() ? conv[i] : 0;
    const long long got = i < rep.ranks_product.size() ? static_cast<long long>(rep.ranks_product[i]) : 0;
    rep.degrees.push_back({i, want, got, want == got});
  }
  while (rep.degrees.size() > 1 && rep.degrees.back().expected == 0 && rep.degrees.back().pass)
    rep.degrees.pop_back();
  return rep;
}

struct BettiBoundReport {
  std::vector<CohomologyGroup> kh;        // rational KH^i(X) from the nerve
  std::vector<std::size_t> exceptional_betti;  // b_i of the dual complex of E
  std::size_t singular_points = 0;
  std::size_t ambient_components = 0;
  std::vector<DegreeVerdict> degrees;  // i >= 1

  bool pass() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.pass; });
  }
};

/// For isolated singularities (dim S = 0): dim KH^i(X) = b_{i-1}(dual E) for
/// i > 1 and dim KH^1(X) = b_0(dual E) - #S. The i = 1 relation assumes a
/// connected resolution; with c components in X~ it picks up the correction
/// dim KH^0(X) - c, which vanishes in the connected case.
inline BettiBoundReport betti_bound_report(const ResolutionData& res) {
  BettiBoundReport rep;
  rep.kh = kh_complete(resolution_nerve(res), Ring::Q);
  auto b = cohomology(dual_complex(res.exceptional), Ring::Q);
  for (const auto& g : b) rep.exceptional_betti.push_back(g.free_rank);
  rep.singular_points = res.singular_points.size();
  rep.ambient_components = res.ambient_components.size();

  auto kh_dim = [&](std::size_t i) -> long long {
    return i < rep.kh.size() ? static_cast<long long>(rep.kh[i].free_rank) : 0;
  };
  auto betti = [&](std::size_t i) -> long long {
    return i < rep.exceptional_betti.size() ? static_cast<long long>(rep.exceptional_betti[i]) : 0;
  };
  const std::size_t top = std::max(rep.kh.size(), rep.exceptional_betti.size() + 1);
  for (std::size_t i = 1; i < std::max<std::size_t>(top, 2); ++i) {
    long long expected = betti(i - 1);
    if (i == 1)
      expected += -static_cast<long long>(rep.singular_points) + kh_dim(0) -
                  static_cast<long long>(rep.ambient_components);
    rep.degrees.push_back({i, expected, kh_dim(i), expected == kh_dim(i)});
  }
  return rep;
}

struct BoundReport {
  std::vector<DegreeVerdict> degrees;  // expected = structure-sheaf bound, actual = KH dimension

  bool pass() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.pass; });
  }
};

/// dim KH^i(X) <= h^i(O_X) degree by degree (or against the fibre dimensions
/// of R^i f_* O_X). h_struct_dims comes from outside this tool.
inline BoundReport bound_check(const std::vector<long long>& kh_dims,
                               const std::vector<long long>& h_struct_dims) {
  if (kh_dims.size() != h_struct_dims.size())
    throw InvalidInput("bound_check: " + std::to_string(kh_dims.size()) + " KH dimensions but " +
                       std::to_string(h_struct_dims.size()) + " structure-sheaf dimensions");
  BoundReport rep;
  for (std::size_t i = 0; i < kh_dims.size(); ++i) {
    if (kh_dims[i] < 0 || h_struct_dims[i] < 0) throw InvalidInput("bound_check: negative dimension");
    rep.degrees.push_back({i, h_struct_dims[i], kh_dims[i], kh_dims[i] <= h_struct_dims[i]});
  }
  return rep;
}

}  // namespace w0
