#include "qvt/system.hpp"

namespace qvt {
namespace {

bool func_leq(const Quantale& q, const FuncTable& a, const FuncTable& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!q.leq(a[i], b[i])) return false;
  }
  return true;
}

int least_index(const Quantale& q, const std::vector<FuncTable>& fs) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    bool least = true;
    for (std::size_t j = 0; j < fs.size() && least; ++j) {
      if (!func_leq(q, fs[i], fs[j])) least = false;
    }
    if (least) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

SystemBase validate_system_base(const Quantale& q, SystemBase base) {
  const int n = base.carrier.size();
  if (static_cast<int>(base.bases.size()) != n) {
    throw error(errc::arity_mismatch, "system base needs a set per point",
                {std::to_string(base.bases.size())});
  }
  if (base.names.size() != base.bases.size()) {
    base.names.resize(base.bases.size());
  }
  for (int x = 0; x < n; ++x) {
    if (base.names[x].size() != base.bases[x].size()) {
      base.names[x].resize(base.bases[x].size());
      for (std::size_t k = 0; k < base.names[x].size(); ++k) {
        if (base.names[x][k].empty()) base.names[x][k] = "phi" + std::to_string(k);
      }
    }
  }

  for (int x = 0; x < n; ++x) {
    const auto& bx = base.bases[x];
    if (bx.empty()) {
      throw error(errc::not_filter_base,
                  "B(" + base.carrier.name(x) + ") is empty",
                  {base.carrier.name(x)});
    }
    for (std::size_t k = 0; k < bx.size(); ++k) {
      if (static_cast<int>(bx[k].size()) != n) {
        throw error(errc::arity_mismatch,
                    base.names[x][k] + " is not total on the carrier",
                    {base.carrier.name(x), base.names[x][k]});
      }
      if (bx[k][x] != q.top()) {
        throw error(errc::not_top_at_point,
                    base.names[x][k] + "(" + base.carrier.name(x) + ") = " +
                        q.name(bx[k][x]) + ", expected " + q.name(q.top()),
                    {base.carrier.name(x), base.names[x][k]});
      }
    }
    for (std::size_t i = 0; i < bx.size(); ++i) {
      for (std::size_t j = i + 1; j < bx.size(); ++j) {
        bool bounded = false;
        for (const FuncTable& lower : bx) {
          bool fits = true;
          for (int y = 0; y < n && fits; ++y) {
            if (!q.leq(lower[y], q.meet(bx[i][y], bx[j][y]))) fits = false;
          }
          if (fits) {
            bounded = true;
            break;
          }
        }
        if (!bounded) {
          throw error(errc::not_filter_base,
                      base.names[x][i] + " and " + base.names[x][j] +
                          " have no lower bound in B(" + base.carrier.name(x) +
                          ")",
                      {base.carrier.name(x), base.names[x][i],
                       base.names[x][j]});
        }
      }
    }
  }

  // Mixing: the selection at x appears as phi_x(z) against every z and as
  // the z = x selection itself, so candidates for it are tried first and
  // the other points are then picked independently.
  for (int x = 0; x < n; ++x) {
    for (std::size_t k = 0; k < base.bases[x].size(); ++k) {
      const FuncTable& phi = base.bases[x][k];
      for (Elem alpha : q.wb_top()) {
        for (Elem omega : q.wa_bot()) {
          bool mixed = false;
          for (const FuncTable& psi : base.bases[x]) {
            bool ok = true;
            for (int z = 0; z < n && ok; ++z) {
              if (z == x) {
                for (int y = 0; y < n && ok; ++y) {
                  if (!q.leq(q.star(q.star(psi[z], psi[y]), alpha),
                             q.join(phi[y], omega))) {
                    ok = false;
                  }
                }
                continue;
              }
              bool found = false;
              for (const FuncTable& chi : base.bases[z]) {
                bool fits = true;
                for (int y = 0; y < n && fits; ++y) {
                  if (!q.leq(q.star(q.star(psi[z], chi[y]), alpha),
                             q.join(phi[y], omega))) {
                    fits = false;
                  }
                }
                if (fits) {
                  found = true;
                  break;
                }
              }
              if (!found) ok = false;
            }
            if (ok) {
              mixed = true;
              break;
            }
          }
          if (!mixed) {
            throw error(errc::mixing_fails,
                        "no selection mixes " + base.names[x][k] + " at " +
                            base.carrier.name(x) + " for alpha " +
                            q.name(alpha) + ", omega " + q.name(omega),
                        {base.carrier.name(x), base.names[x][k], q.name(alpha),
                         q.name(omega)});
          }
        }
      }
    }
  }
  return base;
}

const FuncTable& least_member(const Quantale& q, const SystemBase& base, int x) {
  const int i = least_index(q, base.bases[x]);
  if (i < 0) {
    throw error(errc::not_filter_base,
                "B(" + base.carrier.name(x) + ") has no least member",
                {base.carrier.name(x)});
  }
  return base.bases[x][i];
}

bool system_contains(const Quantale& q, const SystemBase& base, int x,
                     const FuncTable& phi) {
  // A finite filter base has a least member, and the monotone support
  // condition holds for some member iff it holds for the least one.
  const FuncTable& psi = least_member(q, base, x);
  for (Elem alpha : q.wb_top()) {
    for (Elem omega : q.wa_bot()) {
      for (std::size_t y = 0; y < phi.size(); ++y) {
        if (!q.leq(q.star(psi[y], alpha), q.join(phi[y], omega))) return false;
      }
    }
  }
  return true;
}

std::vector<FuncTable> enumerate_system_at(const Quantale& q,
                                           const SystemBase& base, int x,
                                           const Limits& limits) {
  const int n = base.carrier.size();
  std::int64_t candidates = 1;
  for (int i = 0; i < n; ++i) {
    candidates *= q.size();
    if (candidates > limits.func_enum_max) {
      throw error(errc::size_guard,
                  "function enumeration exceeds " +
                      std::to_string(limits.func_enum_max) + " candidates",
                  {std::to_string(n), std::to_string(q.size())});
    }
  }
  std::vector<FuncTable> out;
  FuncTable phi(n, 0);
  while (true) {
    // Members of the saturated system carry top at their own point.
    if (phi[x] == q.top() && system_contains(q, base, x, phi)) {
      out.push_back(phi);
    }
    int i = n;
    while (i > 0 && phi[i - 1] == q.size() - 1) phi[--i] = 0;
    if (i == 0) break;
    ++phi[i - 1];
  }
  return out;
}

SystemBase discrete_system_base(const Quantale& q, const Carrier& c) {
  const int n = c.size();
  SystemBase base{c, {}, {}};
  base.names.resize(n);
  base.bases.resize(n);
  for (int x = 0; x < n; ++x) {
    FuncTable phi(n, q.bottom());
    phi[x] = q.top();
    base.names[x] = {"dis"};
    base.bases[x] = {std::move(phi)};
  }
  return base;
}

SystemBase indiscrete_system_base(const Quantale& q, const Carrier& c) {
  const int n = c.size();
  SystemBase base{c, {}, {}};
  base.names.resize(n);
  base.bases.resize(n);
  for (int x = 0; x < n; ++x) {
    base.names[x] = {"all"};
    base.bases[x] = {FuncTable(n, q.top())};
  }
  return base;
}

}  // namespace qvt
