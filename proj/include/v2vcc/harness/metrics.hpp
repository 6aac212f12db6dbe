#ifndef V2VCC_HARNESS_METRICS_HPP
#define V2VCC_HARNESS_METRICS_HPP

#include "v2vcc/protocol/session.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace v2vcc::harness {

/// One line of sessions.csv.
struct SessionRow
{
  std::string scenarioId;
  std::uint64_t seed = 0;
  std::string cid;
  std::string pid;
  std::string outcome;
  std::array<std::optional<double>, protocol::PHASE_COUNT> phaseMs;
  std::optional<double> totalMs;
  std::optional<double> price;
  std::optional<double> amountKwh;
  std::optional<double> meetX;
  std::optional<double> meetY;
  std::optional<int> rounds;
};

SessionRow
rowFromSession(const std::string& scenarioId, std::uint64_t seed, const protocol::ConsumerSession& session);

struct PhaseSummary
{
  std::string phase;  ///< "discovery" ... "confirmation", or "total"
  std::size_t count = 0;
  double mean = 0.0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

/// Column names for the five phases plus "total", in CSV order.
const std::array<std::string, protocol::PHASE_COUNT + 1>&
phaseColumns();

/// Linear-interpolation quantile (type 7) of sorted @p values.
double
quantile(const std::vector<double>& sorted, double p);

/**
 * @brief Box-plot statistics over completed sessions.
 *
 * Values are taken exactly as printed in sessions.csv, so an outside tool
 * reading that file reproduces the summary bit for bit.
 */
std::vector<PhaseSummary>
summarize(const std::vector<SessionRow>& rows);

struct MetricsTable
{
  std::string scenarioId;
  std::vector<SessionRow> rows;   ///< ordered by run, then consumer
  std::vector<PhaseSummary> summary;
  std::string eventLog;

  const PhaseSummary*
  find(const std::string& phase) const;
};

/// Fixed-point text used for every real-valued CSV field.
std::string
formatReal(double v);

void
writeSessionsCsv(std::ostream& os, const std::vector<SessionRow>& rows);

void
writeSummaryCsv(std::ostream& os, const std::string& scenarioId, const std::vector<PhaseSummary>& summary);

extern const char* const SESSIONS_HEADER;
extern const char* const SUMMARY_HEADER;

} // namespace v2vcc::harness

#endif // V2VCC_HARNESS_METRICS_HPP
