#include "ellip/partitions.hpp"

#include <algorithm>

#include "ellip/errors.hpp"

namespace ellip {

bool is_partition(const Partition& la) {
  for (size_t i = 0; i < la.size(); ++i) {
    if (la[i] < 0) return false;
    if (i + 1 < la.size() && la[i] < la[i + 1]) return false;
  }
  return la.empty() || la.back() > 0;
}

Partition normalized(Partition la) {
  while (!la.empty() && la.back() == 0) la.pop_back();
  return la;
}

int part(const Partition& la, int i) {
  if (i < 1 || i > (int)la.size()) return 0;
  return la[i - 1];
}

long weight(const Partition& la) {
  long w = 0;
  for (int x : la) w += x;
  return w;
}

int length(const Partition& la) { return (int)la.size(); }

Partition conjugate(const Partition& la) {
  Partition c;
  if (la.empty()) return c;
  c.assign(la[0], 0);
  for (int x : la)
    for (int j = 0; j < x; ++j) ++c[j];
  return c;
}

long nstat(const Partition& la) {
  long s = 0;
  for (size_t i = 0; i < la.size(); ++i) s += (long)i * la[i];
  return s;
}

long nstat_conj(const Partition& la) { return nstat(conjugate(la)); }

bool contains(const Partition& la, const Partition& mu) {
  if (mu.size() > la.size()) return false;
  for (size_t i = 0; i < mu.size(); ++i)
    if (mu[i] > la[i]) return false;
  return true;
}

bool dominates(const Partition& la, const Partition& mu) {
  long a = 0, b = 0;
  size_t n = std::max(la.size(), mu.size());
  for (size_t i = 0; i < n; ++i) {
    a += part(la, (int)i + 1);
    b += part(mu, (int)i + 1);
    if (a < b) return false;
  }
  return a == b;
}

Partition complement(int m, int n, const Partition& la) {
  if (length(la) > n || (la.size() && la[0] > m))
    throw EvaluationError("complement: partition not inside the box");
  Partition r(n);
  for (int i = 1; i <= n; ++i) r[i - 1] = m - part(la, n + 1 - i);
  return normalized(r);
}

Partition add_rows(int m, int n, const Partition& la) {
  if (length(la) > n) throw EvaluationError("add_rows: partition longer than n");
  Partition r(n);
  for (int i = 1; i <= n; ++i) r[i - 1] = m + part(la, i);
  return normalized(r);
}

Partition concat_cols(int m, int n, const Partition& la) {
  if (!la.empty() && la[0] > n)
    throw EvaluationError("concat_cols: first part exceeds n");
  return conjugate(add_rows(m, n, conjugate(la)));
}

Partition double_square(const Partition& la) {
  Partition r(2 * la.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = 2 * la[i / 2];
  return r;
}

bool horizontal_strip(const Partition& la, const Partition& ka) {
  int n = std::max(length(la), length(ka));
  for (int i = 1; i <= n; ++i) {
    if (part(ka, i) > part(la, i)) return false;
    if (part(ka, i) < part(la, i + 1)) return false;
  }
  return true;
}

std::vector<Partition> horizontal_strips(const Partition& la) {
  std::vector<Partition> out;
  Partition cur;
  int n = length(la);
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      out.push_back(normalized(cur));
      return;
    }
    for (int v = part(la, i); v >= part(la, i + 1); --v) {
      cur.push_back(v);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

void for_each_chain(const Partition& la, int n,
                    const std::function<void(const std::vector<Partition>&)>& fn) {
  std::vector<Partition> chain(n + 1);
  chain[n] = la;
  std::function<void(int)> rec = [&](int k) {
    if (k == 0) {
      if (chain[0].empty()) fn(chain);
      return;
    }
    for (const Partition& ka : horizontal_strips(chain[k])) {
      chain[k - 1] = ka;
      rec(k - 1);
    }
  };
  if (n == 0) {
    if (la.empty()) fn(chain);
    return;
  }
  rec(n);
}

long count_chains(const Partition& la, int n) {
  long c = 0;
  for_each_chain(la, n, [&](const std::vector<Partition>&) { ++c; });
  return c;
}

std::vector<Partition> partitions_in_box(int m, int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> build = [&](int i, int maxpart) {
    if (i > n) {
      out.push_back(normalized(cur));
      return;
    }
    for (int v = maxpart; v >= 0; --v) {
      cur.push_back(v);
      build(i + 1, v);
      cur.pop_back();
    }
  };
  build(1, m);
  return out;
}

std::vector<Partition> partitions_of(int k) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int v = std::min(rem, maxpart); v >= 1; --v) {
      cur.push_back(v);
      rec(rem - v, v);
      cur.pop_back();
    }
  };
  rec(k, k);
  return out;
}

std::vector<Partition> partitions_up_to(int k) {
  std::vector<Partition> out;
  for (int w = 0; w <= k; ++w) {
    auto batch = partitions_of(w);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace ellip
