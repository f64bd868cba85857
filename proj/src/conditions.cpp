#include "cdecomp/conditions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cdecomp {

namespace {

long choose2(long n) { return n * (n - 1) / 2; }

long sum_of(const std::vector<int>& lengths) { return std::accumulate(lengths.begin(), lengths.end(), 0L); }

long sum_at_least_three(const std::vector<int>& lengths) {
  long s = 0;
  for (int c : lengths) s += c >= 3 ? c : 0;
  return s;
}

int max_of(const std::vector<int>& lengths) {
  return lengths.empty() ? 0 : *std::max_element(lengths.begin(), lengths.end());
}

ConditionItem range_item(const std::string& name, const std::vector<int>& lengths, long hi) {
  ConditionItem item{name, true, true, ""};
  for (int c : lengths) {
    if (c < 2 || c > hi) {
      item.pass = false;
      item.inequality = "2 <= " + std::to_string(c) + " <= " + std::to_string(hi) + " fails";
      return item;
    }
  }
  item.inequality = "2 <= c_i <= " + std::to_string(hi) + " for all " + std::to_string(lengths.size()) + " lengths";
  return item;
}

ConditionItem sum_item(const std::string& name, long sum, long expected, const std::string& how) {
  const bool pass = sum == expected;
  return {name, pass, true,
          "sum c_i = " + std::to_string(sum) + (pass ? " == " : " != ") + how + " = " + std::to_string(expected)};
}

ConditionItem long_cycles_item(const std::string& name, bool applicable, long sum, long bound) {
  if (!applicable) return {name, true, false, "not applicable (multiplicity even)"};
  const bool pass = sum >= bound;
  return {name, pass, true,
          "sum of c_i >= 3 is " + std::to_string(sum) + (pass ? " >= " : " < ") + std::to_string(bound)};
}

ConditionItem max_item(const std::string& name, bool applicable, int max_c, long edges, long k) {
  if (!applicable) return {name, true, false, "not applicable (multiplicity odd)"};
  // half * edges - k + 2; edges is even whenever this condition applies.
  const long bound = edges / 2 - k + 2;
  const bool pass = max_c <= bound;
  std::ostringstream s;
  s << "max c_i = " << max_c << (pass ? " <= " : " > ") << edges / 2 << " - " << k << " + 2 = " << bound;
  return {name, pass, true, s.str()};
}

}  // namespace

bool ConditionReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const ConditionItem& i) { return i.pass; });
}

const ConditionItem& ConditionReport::item(const std::string& name) const {
  for (const auto& i : items)
    if (i.name == name) return i;
  throw std::out_of_range("no condition named " + name);
}

ConditionReport check_complete_conditions(int mu, int n, const std::vector<int>& lengths) {
  if (mu < 1 || n < 2) throw std::invalid_argument("need mu >= 1 and n >= 2");
  ConditionReport r;
  const long k = static_cast<long>(lengths.size());
  r.items.push_back(range_item("B1", lengths, n));
  r.items.push_back(sum_item("B2", sum_of(lengths), n * ((static_cast<long>(mu) * (n - 1)) / 2),
                             "n*floor(mu(n-1)/2)"));
  r.items.push_back(long_cycles_item("B3", mu % 2 == 1, sum_at_least_three(lengths), n * ((n - 1) / 2L)));
  r.items.push_back(max_item("B4", mu % 2 == 0, max_of(lengths), mu * choose2(n), k));
  return r;
}

ConditionReport check_equipartite_conditions(int lambda, int m, int n, const std::vector<int>& lengths) {
  if (lambda < 1 || m < 1 || n < 2) throw std::invalid_argument("need lambda, m >= 1 and n >= 2");
  ConditionReport r;
  const long k = static_cast<long>(lengths.size());
  const long mm = m;
  r.items.push_back(range_item("C1", lengths, mm * n));

  ConditionItem even{"C1'", true, n == 2, ""};
  if (n != 2) {
    even.inequality = "not applicable (n > 2)";
  } else {
    auto odd = std::find_if(lengths.begin(), lengths.end(), [](int c) { return c % 2 != 0; });
    even.pass = odd == lengths.end();
    even.inequality = even.pass ? "all lengths even" : "length " + std::to_string(*odd) + " is odd with n = 2";
  }
  r.items.push_back(even);

  r.items.push_back(sum_item("C2", sum_of(lengths), mm * n * ((lambda * mm * (n - 1)) / 2),
                             "mn*floor(lambda m(n-1)/2)"));
  // Odd lambda: each pair keeps an edge outside the 2-cycles, except the
  // mn/2 pairs of a forced 1-factor. Reduces to B3 at m = 1.
  r.items.push_back(long_cycles_item("C3", lambda % 2 == 1, sum_at_least_three(lengths), mm * n * ((mm * (n - 1)) / 2)));
  r.items.push_back(max_item("C4", lambda % 2 == 0, max_of(lengths), lambda * mm * mm * choose2(n), k));
  return r;
}

}  // namespace cdecomp
