#ifndef V2VCC_NAMING_FILTER_HPP
#define V2VCC_NAMING_FILTER_HPP

#include "v2vcc/naming/types.hpp"

namespace v2vcc::naming {

/// True iff every bound present in @p filter holds for @p profile.
bool
matchesFilter(const SupplierProfile& profile, const DiscoveryFilter& filter);

} // namespace v2vcc::naming

#endif // V2VCC_NAMING_FILTER_HPP
