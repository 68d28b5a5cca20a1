#pragma once

#include <functional>
#include <vector>

namespace ellip {

// Weakly decreasing, trailing zeros stripped.  The empty vector is the zero
// partition.
using Partition = std::vector<int>;

bool is_partition(const Partition& la);
Partition normalized(Partition la);

// 1-based part access, zero beyond the last part.
int part(const Partition& la, int i);

long weight(const Partition& la);                 // |la|
Partition conjugate(const Partition& la);
long nstat(const Partition& la);                  // n(la) = sum_i (i-1) la_i
long nstat_conj(const Partition& la);             // n(la')
int length(const Partition& la);

bool contains(const Partition& la, const Partition& mu);   // mu subset la
bool dominates(const Partition& la, const Partition& mu);  // same weight assumed

// Box complement m^n - la; requires la inside the m^n box.
Partition complement(int m, int n, const Partition& la);
// m^n + la; requires length(la) <= n.
Partition add_rows(int m, int n, const Partition& la);
// m^n . la = (m^n + la')'; requires la_1 <= n.
Partition concat_cols(int m, int n, const Partition& la);
// (2 la^2)_i = 2 la_{ceil(i/2)}.
Partition double_square(const Partition& la);

// Horizontal strip predicate ka <' la: la_{i+1} <= ka_i <= la_i for all i.
bool horizontal_strip(const Partition& la, const Partition& ka);
std::vector<Partition> horizontal_strips(const Partition& la);

// Chains 0 = ka^0 <' ka^1 <' ... <' ka^n = la, visited lazily.  These are in
// bijection with semistandard tableaux of shape la with entries at most n.
void for_each_chain(const Partition& la, int n,
                    const std::function<void(const std::vector<Partition>&)>& fn);
long count_chains(const Partition& la, int n);

std::vector<Partition> partitions_in_box(int m, int n);  // all mu inside m^n
std::vector<Partition> partitions_of(int k);
// All partitions of weight <= k (length unrestricted), by weight then lex.
std::vector<Partition> partitions_up_to(int k);

}  // namespace ellip
