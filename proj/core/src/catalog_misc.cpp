#include "catalog_util.hpp"

namespace exsol {

void register_misc(std::vector<SolutionEntry>& v) { (void)v; }

}  // namespace exsol
