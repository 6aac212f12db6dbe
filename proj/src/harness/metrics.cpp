#include "v2vcc/harness/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace v2vcc::harness {

const char* const SESSIONS_HEADER =
  "scenario_id,seed,cid,pid,outcome,discovery_ms,verification_ms,negotiation_ms,coordination_ms,"
  "confirmation_ms,total_ms,price,amount_kwh,meet_x,meet_y,rounds";
const char* const SUMMARY_HEADER = "scenario_id,phase,count,mean,min,q1,median,q3,max";

const std::array<std::string, protocol::PHASE_COUNT + 1>&
phaseColumns()
{
  static const std::array<std::string, protocol::PHASE_COUNT + 1> names = {
    "discovery", "verification", "negotiation", "coordination", "confirmation", "total"};
  return names;
}

std::string
formatReal(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

namespace {

double
quantized(double v)
{
  return std::strtod(formatReal(v).c_str(), nullptr);
}

std::string
cell(const std::optional<double>& v)
{
  return v ? formatReal(*v) : "";
}

} // namespace

SessionRow
rowFromSession(const std::string& scenarioId, std::uint64_t seed, const protocol::ConsumerSession& s)
{
  SessionRow row;
  row.scenarioId = scenarioId;
  row.seed = seed;
  row.cid = s.spec.cid;
  row.pid = s.selected.value_or("");
  row.outcome = std::string(protocol::toString(s.outcome));
  for (std::size_t i = 0; i < protocol::PHASE_COUNT; ++i) {
    row.phaseMs[i] = s.timings[i].duration();
  }
  row.totalMs = s.total();
  if (s.record) {
    row.price = s.record->price;
    row.amountKwh = s.record->amount;
    if (s.record->meeting.location) {
      row.meetX = s.record->meeting.location->x;
      row.meetY = s.record->meeting.location->y;
    }
  }
  else if (s.agreement) {
    row.price = s.agreement->pricePerKwh;
    row.amountKwh = s.agreement->amountKwh;
  }
  if (s.negotiationRounds > 0) {
    row.rounds = s.negotiationRounds;
  }
  return row;
}

double
quantile(const std::vector<double>& sorted, double p)
{
  if (sorted.empty()) {
    return std::nan("");
  }
  double h = static_cast<double>(sorted.size() - 1) * p;
  auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) {
    return sorted.back();
  }
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

std::vector<PhaseSummary>
summarize(const std::vector<SessionRow>& rows)
{
  std::vector<PhaseSummary> out;
  for (std::size_t col = 0; col <= protocol::PHASE_COUNT; ++col) {
    std::vector<double> values;
    for (const auto& r : rows) {
      if (r.outcome != "done") {
        continue;
      }
      const auto& v = col < protocol::PHASE_COUNT ? r.phaseMs[col] : r.totalMs;
      if (v) {
        values.push_back(quantized(*v));
      }
    }
    if (values.empty()) {
      continue;
    }
    PhaseSummary s;
    s.phase = phaseColumns()[col];
    s.count = values.size();
    double sum = 0.0;
    for (double v : values) {
      sum += v;
    }
    s.mean = sum / static_cast<double>(values.size());
    std::sort(values.begin(), values.end());
    s.min = values.front();
    s.q1 = quantile(values, 0.25);
    s.median = quantile(values, 0.5);
    s.q3 = quantile(values, 0.75);
    s.max = values.back();
    out.push_back(s);
  }
  return out;
}

const PhaseSummary*
MetricsTable::find(const std::string& phase) const
{
  for (const auto& s : summary) {
    if (s.phase == phase) {
      return &s;
    }
  }
  return nullptr;
}

void
writeSessionsCsv(std::ostream& os, const std::vector<SessionRow>& rows)
{
  os << SESSIONS_HEADER << '\n';
  for (const auto& r : rows) {
    os << r.scenarioId << ',' << r.seed << ',' << r.cid << ',' << r.pid << ',' << r.outcome;
    for (const auto& p : r.phaseMs) {
      os << ',' << cell(p);
    }
    os << ',' << cell(r.totalMs) << ',' << cell(r.price) << ',' << cell(r.amountKwh) << ',' << cell(r.meetX)
       << ',' << cell(r.meetY) << ',' << (r.rounds ? std::to_string(*r.rounds) : "") << '\n';
  }
}

void
writeSummaryCsv(std::ostream& os, const std::string& scenarioId, const std::vector<PhaseSummary>& summary)
{
  os << SUMMARY_HEADER << '\n';
  for (const auto& s : summary) {
    os << scenarioId << ',' << s.phase << ',' << s.count << ',' << formatReal(s.mean) << ',' << formatReal(s.min)
       << ',' << formatReal(s.q1) << ',' << formatReal(s.median) << ',' << formatReal(s.q3) << ','
       << formatReal(s.max) << '\n';
  }
}

} // namespace v2vcc::harness
