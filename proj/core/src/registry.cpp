#include <set>

#include "catalogue.hpp"
#include "qsv/errors.hpp"

namespace qsv {

std::vector<IdentityCheck> register_builtin_catalogue() {
  std::vector<IdentityCheck> out;
  catalogue::add_classical(out);
  catalogue::add_string(out);
  catalogue::add_polar(out);
  std::set<std::string> ids;
  for (const auto& c : out) {
    if (!ids.insert(c.id).second) throw InvalidArgument("duplicate check id '" + c.id + "'");
  }
  return out;
}

}  // namespace qsv
