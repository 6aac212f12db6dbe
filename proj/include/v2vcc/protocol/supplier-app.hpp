#ifndef V2VCC_PROTOCOL_SUPPLIER_APP_HPP
#define V2VCC_PROTOCOL_SUPPLIER_APP_HPP

#include "v2vcc/ndn/node.hpp"
#include "v2vcc/protocol/negotiation.hpp"
#include "v2vcc/protocol/session.hpp"

#include <map>

namespace v2vcc::protocol {

/// Deliberate misbehaviour, for exercising the consumer's checks.
struct SupplierFaults
{
  /// Price advertised in discovery replies instead of the real one.
  std::optional<double> advertisedPrice;
  /// Verification replies carry a signature that does not verify.
  bool badVerificationSignature = false;
  /// Number of confirmation interests silently ignored, as if lost.
  int ignoredConfirmations = 0;
};

struct SupplierCounters
{
  std::uint64_t discoveryReplies = 0;
  std::uint64_t verificationReplies = 0;
  std::uint64_t negotiationReplies = 0;
  std::uint64_t coordinationReplies = 0;
  std::uint64_t confirmations = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t ignored = 0; ///< malformed, misaddressed or excluded interests
  double peakReservedKwh = 0.0;
};

/**
 * @brief Producer application of a selling EV.
 *
 * Answers discovery broadcasts that its profile satisfies and keeps one
 * negotiation/coordination record per consumer id.
 */
class SupplierApp
{
public:
  SupplierApp(ndn::Node& node, SupplierProfile profile, ClockTime startClock, ProtocolConfig config,
              SupplierFaults faults = {});

  const std::string&
  pid() const
  {
    return m_profile.pid;
  }

  /// Profile with the current location and earliest reservation expiry.
  SupplierProfile
  currentProfile() const;

  /// Energy reserved by live reservations, excluding @p cid when given.
  double
  reservedKwh(const std::string* exceptCid = nullptr) const;

  const std::vector<TransactionRecord>&
  transactions() const
  {
    return m_transactions;
  }

  const SupplierCounters&
  counters() const
  {
    return m_counters;
  }

  /// Price each consumer agreed to, for audits.
  std::vector<std::pair<std::string, Offer>>
  agreements() const;

  double
  floorPrice() const
  {
    return m_profile.pricePerKwh * m_config.negotiation.floorFraction;
  }

private:
  struct Reservation
  {
    double amount = 0.0;
    sim::Time until = 0.0;
  };

  struct ConsumerRecord
  {
    std::optional<SupplierNegotiation> negotiation;
    std::optional<Offer> agreed;
    std::optional<Reservation> reservation;
    std::optional<MeetingProposal> meeting;
    int spatialRounds = 0;
    std::optional<TransactionRecord> confirmed;
    std::map<ndn::Name, std::string> answered; ///< interest name -> payload already sent
  };

  void
  onInterest(const ndn::Interest& interest);

  void
  onDiscovery(const ndn::Interest& interest, const naming::ParsedMessage& msg);

  void
  onVerification(const ndn::Interest& interest);

  std::string
  onNegotiation(const std::string& cid, const naming::ParsedMessage& msg, ConsumerRecord& rec);

  std::string
  onCoordination(const naming::ParsedMessage& msg, ConsumerRecord& rec);

  std::string
  onConfirmation(const ndn::Name& name, const naming::ParsedMessage& msg, ConsumerRecord& rec);

  void
  reply(const ndn::Name& name, std::string payload, sim::Time freshness, bool corruptSignature = false);

  ClockTime
  clockNow() const;

  double
  travelMph() const;

  void
  notePeak();

private:
  ndn::Node& m_node;
  SupplierProfile m_profile;
  ClockTime m_startClock;
  ProtocolConfig m_config;
  SupplierFaults m_faults;
  std::map<std::string, ConsumerRecord> m_consumers;
  std::vector<TransactionRecord> m_transactions;
  SupplierCounters m_counters;
};

} // namespace v2vcc::protocol

#endif // V2VCC_PROTOCOL_SUPPLIER_APP_HPP
