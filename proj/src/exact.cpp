#include "abelian/exact.hpp"

#include <stdexcept>

namespace abelian {

Exact parse_exact(const std::string& text) {
  // mpq_class accepts "a/b" with optional sign; reject anything else rather
  // than silently reading a prefix.
  const auto ok = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!ok(num, true) || !ok(den, false)) throw std::invalid_argument("not an exact value: '" + text + "'");
  BigInt d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Exact out(BigInt(num[0] == '+' ? num.substr(1) : num, 10), d);
  out.canonicalize();
  return out;
}

}  // namespace abelian
