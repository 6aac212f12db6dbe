#ifndef V2VCC_PROTOCOL_SELECTION_HPP
#define V2VCC_PROTOCOL_SELECTION_HPP

#include "v2vcc/naming/types.hpp"
#include "v2vcc/protocol/policy.hpp"

namespace v2vcc::protocol {

/// Strict weak ordering of two candidates as seen from @p consumer.
/// Ties on every criterion fall back to pid order.
bool
rankedBefore(const SupplierProfile& a, const SupplierProfile& b, Vec2 consumer,
             const std::vector<Criterion>& criteria);

/// Best candidate under @p criteria. @throw std::invalid_argument on an empty list
std::string
selectSupplier(const std::vector<SupplierProfile>& candidates, Vec2 consumer,
               const std::vector<Criterion>& criteria);

} // namespace v2vcc::protocol

#endif // V2VCC_PROTOCOL_SELECTION_HPP
