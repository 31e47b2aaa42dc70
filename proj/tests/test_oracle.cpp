#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "ssym/errors.hpp"
#include "ssym/oracle.hpp"

using namespace ssym;

namespace {

// Brute force over raw monomials: dim of {f of degree d : f symmetric in each
// block and d/dT psi(f) = 0}, as the nullity of a dense matrix over F_p.
std::size_t brute_force_dimension(unsigned m, unsigned n, std::uint32_t p, std::uint32_t d) {
  const unsigned nv = m + n;
  std::vector<std::vector<std::uint32_t>> monos;
  std::vector<std::uint32_t> cur(nv);
  auto rec = [&](auto&& self, unsigned slot, std::uint32_t left) -> void {
    if (slot + 1 == nv) {
      cur[slot] = left;
      monos.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      cur[slot] = e;
      self(self, slot + 1, left - e);
    }
  };
  if (nv == 0) return d == 0;
  rec(rec, 0, d);

  // Row keys: (constraint id, image exponent vector) -> row index.
  std::map<std::pair<int, std::vector<std::uint32_t>>, std::size_t> rows;
  std::vector<std::map<std::size_t, std::int64_t>> cols(monos.size());
  auto add = [&](std::size_t col, int cid, std::vector<std::uint32_t> key, std::int64_t v) {
    auto it = rows.emplace(std::pair{cid, std::move(key)}, rows.size()).first;
    cols[col][it->second] += v;
  };
  for (std::size_t c = 0; c < monos.size(); ++c) {
    const auto& e = monos[c];
    int cid = 0;
    // f - s f for each adjacent transposition s inside a block
    auto swaps = [&](unsigned first, unsigned size) {
      for (unsigned i = 0; i + 1 < size; ++i, ++cid) {
        auto sw = e;
        std::swap(sw[first + i], sw[first + i + 1]);
        add(c, cid, e, 1);
        add(c, cid, sw, -1);
      }
    };
    swaps(0, m);
    swaps(m, n);
    if (m && n) {
      // x_m = y_n = T, then d/dT
      const std::uint32_t t = e[m - 1] + e[m + n - 1];
      if (t % p) {
        std::vector<std::uint32_t> key;
        for (unsigned i = 0; i + 1 < m; ++i) key.push_back(e[i]);
        for (unsigned j = 0; j + 1 < n; ++j) key.push_back(e[m + j]);
        key.push_back(t - 1);
        add(c, 1000, key, t);
      }
    }
  }
  // dense elimination
  std::vector<std::vector<std::int64_t>> A(rows.size(), std::vector<std::int64_t>(monos.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (auto [r, v] : cols[c]) A[r][c] = ((v % p) + p) % p;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < monos.size() && rank < A.size(); ++c) {
    std::size_t piv = rank;
    while (piv < A.size() && A[piv][c] == 0) ++piv;
    if (piv == A.size()) continue;
    std::swap(A[piv], A[rank]);
    std::int64_t inv = 1;
    for (std::uint32_t i = 0; i < p - 2; ++i) inv = inv * A[rank][c] % p;
    for (auto& v : A[rank]) v = v * inv % p;
    for (std::size_t r = 0; r < A.size(); ++r)
      if (r != rank && A[r][c]) {
        const std::int64_t f = A[r][c];
        for (std::size_t k = 0; k < monos.size(); ++k) A[r][k] = ((A[r][k] - f * A[rank][k]) % p + p) % p;
      }
    ++rank;
  }
  return monos.size() - rank;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions(0, 0).size() == 1);
  CHECK(partitions(3, 0).empty());
  CHECK(partitions(4, 2) == std::vector<std::vector<std::uint32_t>>{{4}, {3, 1}, {2, 2}});
  CHECK(partitions(6, 6).size() == 11);
}

TEST_CASE("A_s dimensions, worked values") {
  CHECK(as_dimension(1, 1, 3, 0) == 1);
  CHECK(as_dimension(1, 1, 3, 1) == 1);
  CHECK(as_dimension(0, 2, 3, 2) == 2);
}

TEST_CASE("generated dimensions, worked values") {
  CHECK(generated_dimension(1, 1, 3, 0) == 1);
  CHECK(generated_dimension(2, 2, 5, 0) == 1);
  CHECK(generated_dimension(1, 1, 3, 1) == 1);
}

TEST_CASE("A_s dimension agrees with a raw-monomial brute force") {
  for (std::uint32_t p : {3u, 5u})
    for (unsigned m = 0; m <= 2; ++m)
      for (unsigned n = 0; n <= 2; ++n)
        for (std::uint32_t d = 0; d <= 7; ++d) {
          CAPTURE(p);
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(d);
          CHECK(as_dimension(m, n, p, d) == brute_force_dimension(m, n, p, d));
        }
}

TEST_CASE("m = 0 carries no constraint") {
  for (unsigned n = 1; n <= 3; ++n)
    for (std::uint32_t d = 0; d <= 8; ++d) CHECK(as_dimension(0, n, 3, d) == partitions(d, n).size());
}

TEST_CASE("dimension reports") {
  const DimReport r = dim_report(1, 1, 3, 4);
  CHECK(r.match);
  CHECK(r.dim_As == r.dim_generated);
  CHECK(format_csv_row(r) == "1,1,3,4," + std::to_string(r.dim_As) + "," + std::to_string(r.dim_As) + ",true");
  CHECK(std::string(kDimCsvHeader) == "m,n,p,d,dim_As,dim_generated,match");
  for (std::uint32_t d = 0; d <= 8; ++d) CHECK(format_csv_row(dim_report(2, 1, 5, d)) == format_csv_row(dim_report(2, 1, 5, d)));
}

TEST_CASE("generated dimension never exceeds the A_s dimension") {
  for (std::uint32_t d = 0; d <= 9; ++d) CHECK(generated_dimension(2, 2, 3, d) <= as_dimension(2, 2, 3, d));
}

TEST_CASE("c_r generating function") {
  CHECK(cr_generating_check(1, 1, 3, 4));
  CHECK(cr_generating_check(2, 1, 5, 5));
  CHECK(cr_generating_check(0, 2, 3, 2));
  CHECK_THROWS_AS(cr_generating_check(2, 2, 3, 3), DomainError);
}

TEST_CASE("bracket psi-identities, worked instances") {
  const KSeq ks(PrimeField(3), 1);
  CHECK(lemma_l1_check(DeltaSeq(), 1, 0, 2, 1, ks, BracketIdentity::Brace));
  CHECK(lemma_l1_check(DeltaSeq(), 0, 0, 1, 1, ks, BracketIdentity::Round));
  CHECK_THROWS_AS(lemma_l1_check(DeltaSeq(), 1, 0, 0, 1, ks, BracketIdentity::Brace), DomainError);
}

TEST_CASE("bracket psi-identities on the full small grid") {
  std::size_t checked = 0;
  for (std::uint32_t p : {3u, 5u, 7u})
    for (unsigned k = 1; k < p; ++k) {
      const KSeq ks(PrimeField(p), k);
      for (unsigned m = 1; m <= 3; ++m)
        for (unsigned n = 1; n <= 3; ++n)
          for (const auto& D : enumerate_deltas(ks.s(), ks.s() * ks.s())) {
            for (unsigned l = 1; l <= ks.s(); ++l)
              for (int j = 0; j <= static_cast<int>(n); ++j, ++checked)
                REQUIRE(lemma_l1_check(D, l, j, m, n, ks, BracketIdentity::Brace));
            for (int j = 0; j < static_cast<int>(n); ++j, ++checked)
              REQUIRE(lemma_l1_check(D, 0, j, m, n, ks, BracketIdentity::Round));
          }
    }
  CHECK(checked > 1000);
}
