#include "mirror/bitvec.hpp"

#include <stdexcept>

namespace mirror {

BitVec BitVec::from_string(const std::string& s) {
  BitVec out(static_cast<int>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') out.set(static_cast<int>(i));
    else if (s[i] != '0') throw std::invalid_argument("bit string contains '" + std::string(1, s[i]) + "'");
  }
  return out;
}

}  // namespace mirror
