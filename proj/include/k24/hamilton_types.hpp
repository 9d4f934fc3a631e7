#ifndef K24_HAMILTON_TYPES_HPP
#define K24_HAMILTON_TYPES_HPP

#include <vector>

namespace k24 {

// Hamilton cycle, hamilton path, or hamilton base.  A base is a hamilton
// path optionally extended by one extra edge at either end; the extension
// endpoints revisit path vertices, so the sequence is a trail, not a
// path.  ext_front / ext_back mark which ends carry an extension.
struct HamiltonCertificate {
  enum class Kind { Cycle, Path, Base };
  Kind kind = Kind::Path;
  std::vector<int> sequence;
  bool ext_front = false;
  bool ext_back = false;
};

}  // namespace k24

#endif  // K24_HAMILTON_TYPES_HPP
