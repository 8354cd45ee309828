#include "qrs/named_systems.hpp"

#include "qrs/enumerate.hpp"

namespace qrs {

QuasiRootSystemData system_from_simple_roots(int dim, const GramMatrix& simple) {
  auto data = QuasiRootSystemData::from_gram(dim, simple);
  auto res = validate_gram(data);
  if (!res.ok()) throw BadParams("system_from_simple_roots: " + res.detail);
  auto closed = close_under_rules(std::move(data), 4096);
  if (!closed) throw BadParams("system_from_simple_roots: closure is inconsistent");
  return *closed;
}

namespace {

GramMatrix chain_gram(int n, std::int64_t diag, std::int64_t edge) {
  GramMatrix g(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    g[i][i] = diag;
    if (i + 1 < n) g[i][i + 1] = g[i + 1][i] = edge;
  }
  return g;
}

QuasiRootSystemData cartan(const std::string& name, int n) {
  auto expect = [&](const QuasiRootSystemData& sys, int positives) {
    if (sys.positive_count() != positives)
      throw std::logic_error(name + ": closure produced " +
                             std::to_string(sys.positive_count()) + " positive roots, expected " +
                             std::to_string(positives));
    return sys;
  };
  if (name == "A_n") {
    if (n < 1) throw BadParams("A_n needs n >= 1");
    return expect(system_from_simple_roots(n, chain_gram(n, 4, -2)), n * (n + 1) / 2);
  }
  if (name == "B_n") {
    if (n < 2) throw BadParams("B_n needs n >= 2");
    auto g = chain_gram(n, 4, -2);
    g[n - 1][n - 1] = 2;  // last simple root is short
    return expect(system_from_simple_roots(n, g), n * n);
  }
  if (name == "C_n") {
    if (n < 3) throw BadParams("C_n needs n >= 3");
    auto g = chain_gram(n, 2, -1);
    g[n - 1][n - 1] = 4;
    g[n - 2][n - 1] = g[n - 1][n - 2] = -2;
    return expect(system_from_simple_roots(n, g), n * n);
  }
  if (name == "D_n") {
    if (n < 4) throw BadParams("D_n needs n >= 4");
    auto g = chain_gram(n - 1, 4, -2);
    g.emplace_back(n, 0);
    for (auto& row : g) row.resize(n, 0);
    g[n - 1][n - 1] = 4;
    g[n - 3][n - 1] = g[n - 1][n - 3] = -2;  // fork at the (n-2)-th node
    return expect(system_from_simple_roots(n, g), n * (n - 1));
  }
  // E-series as a T-shaped diagram: chain of n-1 nodes, extra node on node 2
  if (name == "E6" || name == "E7" || name == "E8") {
    int rank = name == "E6" ? 6 : name == "E7" ? 7 : 8;
    auto g = chain_gram(rank - 1, 4, -2);
    g.emplace_back(rank, 0);
    for (auto& row : g) row.resize(rank, 0);
    g[rank - 1][rank - 1] = 4;
    g[2][rank - 1] = g[rank - 1][2] = -2;
    int positives = rank == 6 ? 36 : rank == 7 ? 63 : 120;
    return expect(system_from_simple_roots(rank, g), positives);
  }
  if (name == "F4") {
    GramMatrix g = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    return expect(system_from_simple_roots(4, g), 24);
  }
  throw UnknownName("named_system: " + name);
}

QuasiRootSystemData product_system(const std::string& first, const std::string& second) {
  auto parse = [](const std::string& s) -> QuasiRootSystemData {
    if (s.size() >= 2 && (s[0] == 'A' || s[0] == 'D')) {
      int n = std::stoi(s.substr(1));
      return cartan(s[0] == 'A' ? "A_n" : "D_n", n);
    }
    if (s == "E6" || s == "E7" || s == "E8") return cartan(s, 0);
    throw BadParams("product construction takes ADE factors, got " + s);
  };
  auto f1 = parse(first), f2 = parse(second);
  // factors renormalized to squared length 2: halve the norm-4 ADE Grams
  auto halve = [](const QuasiRootSystemData& d) {
    GramMatrix g = d.gram;
    for (auto& row : g)
      for (auto& v : row) {
        if (v % 2 != 0) throw std::logic_error("product factor gram not even");
        v /= 2;
      }
    return g;
  };
  GramMatrix g1 = halve(f1), g2 = halve(f2);
  int p1 = static_cast<int>(g1.size()), p2 = static_cast<int>(g2.size());
  QuasiRootSystemData out;
  out.dim = f1.dim * f2.dim;
  out.gram.assign(p1 * p2, std::vector<std::int64_t>(p1 * p2));
  out.lengths.assign(p1 * p2, Length::Long);
  for (int i = 0; i < p1; ++i)
    for (int j = 0; j < p2; ++j)
      for (int k = 0; k < p1; ++k)
        for (int l = 0; l < p2; ++l)
          out.gram[i * p2 + j][k * p2 + l] = g1[i][k] * g2[j][l];
  return out;
}

QuasiRootSystemData joseph21() {
  const int p = 22;
  QuasiRootSystemData out;
  out.dim = 21;
  out.gram.assign(p, std::vector<std::int64_t>(p, 0));
  out.lengths.assign(p, Length::Long);
  GramMatrix block = {{4, 1, 0}, {1, 4, 1}, {0, 1, 4}};
  for (int b = 0; b < 7; ++b)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out.gram[3 * b + i][3 * b + j] = block[i][j];
  for (int t = 0; t < 21; ++t) out.gram[21][t] = out.gram[t][21] = 1;
  out.gram[21][21] = 4;
  return out;
}

}  // namespace

QuasiRootSystemData named_system(const std::string& name, const NamedArgs& args) {
  if (name == "A_n" || name == "B_n" || name == "C_n" || name == "D_n" || name == "E6" ||
      name == "E7" || name == "E8" || name == "F4")
    return cartan(name, args.n);
  if (name == "I2")
    return QuasiRootSystemData::from_gram(2, {{4, -1}, {-1, 4}});
  if (name == "T2")
    return system_from_simple_roots(2, {{4, -3}, {-3, 4}});
  if (name == "Itype") {
    if (args.c.empty()) throw BadParams("Itype needs a product matrix");
    for (std::size_t i = 0; i < args.c.size(); ++i) {
      if (args.c[i].size() != args.c.size()) throw BadParams("Itype matrix must be square");
      if (args.c[i][i] != 4) throw BadParams("Itype matrix diagonal must be 4");
      for (std::size_t j = 0; j < args.c.size(); ++j)
        if (i != j && std::llabs(args.c[i][j]) > 1)
          throw BadParams("Itype off-diagonal entries must be 0 or +-1");
    }
    Mat<Rat> m(args.c.size(), std::vector<Rat>(args.c.size()));
    for (std::size_t i = 0; i < args.c.size(); ++i)
      for (std::size_t j = 0; j < args.c.size(); ++j) m[i][j] = Rat(args.c[i][j]);
    int rank = static_cast<int>(mat_rank(std::move(m)));
    return QuasiRootSystemData::from_gram(rank, args.c);
  }
  if (name == "Product") {
    if (args.first.empty() || args.second.empty())
      throw BadParams("Product needs two ADE factor names");
    return product_system(args.first, args.second);
  }
  if (name == "Joseph21") return joseph21();
  throw UnknownName("named_system: " + name);
}

}  // namespace qrs
