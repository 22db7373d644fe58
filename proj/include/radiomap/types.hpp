// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace radiomap {

/// The three LTE metrics this pipeline models. RSRP and RSSI predictions are
/// composed as physics-estimate + learned correction; RSRQ is predicted
/// directly by the network (the estimate only drives it as an input).
enum class MetricKind { Rsrp, Rsrq, Rssi };

std::string to_string(MetricKind kind);
MetricKind metric_from_string(const std::string& name);

/// Residual composition: prediction = beta + correction. RSRQ is direct.
constexpr bool metric_uses_residual(MetricKind kind) {
    return kind != MetricKind::Rsrq;
}

/// Default temporal-feature schema: RSRQ and RSSI carry day_of_week and
/// hour_of_day, RSRP does not. Overridable per training config.
constexpr bool metric_uses_temporal(MetricKind kind) {
    return kind != MetricKind::Rsrp;
}

/// Geographic position. alt_ag_m is meters above local ground, so the
/// absolute height depends on the terrain model underneath.
struct GeoPoint {
    double lon = 0.0;
    double lat = 0.0;
    double alt_ag_m = 0.0;
};

inline bool valid_lon_lat(double lon, double lat) {
    return lon >= -180.0 && lon <= 180.0 && lat >= -90.0 && lat <= 90.0;
}

/// One crowdsourced measurement sample. Transmitter data is denormalized
/// into the record; RSSI is always derived, never ingested.
struct MeasurementRecord {
    std::string record_id;
    std::int64_t timestamp_utc = 0;  // seconds since epoch
    GeoPoint ue;
    std::string tx_id;
    double tx_lon = 0.0;
    double tx_lat = 0.0;
    double tx_height_m = 0.0;
    double tx_power_dbm = 0.0;
    double downlink_frequency_mhz = 0.0;
    double rsrp_dbm = 0.0;
    std::optional<double> rsrq_db;
    std::optional<double> rssi_dbm;  // derived at ingestion when RSRQ present
    std::string geohash6;

    GeoPoint tx_point() const { return GeoPoint{tx_lon, tx_lat, tx_height_m}; }

    /// Target value for a metric; throws if the record lacks it.
    double target(MetricKind kind) const;
};

// Civil-time helpers (proleptic Gregorian, UTC). Used for the temporal
// features and for parsing/formatting the measurement CSV timestamps.
std::int64_t days_from_civil(int y, int m, int d);
void civil_from_days(std::int64_t days, int& y, int& m, int& d);
std::int64_t parse_iso8601_utc(const std::string& text);  // throws on malformed input
std::string format_iso8601_utc(std::int64_t epoch_seconds);

/// Day of week with Monday = 0 ... Sunday = 6, after shifting the epoch by
/// a fixed local offset in hours.
int day_of_week(std::int64_t epoch_seconds, int utc_offset_hours = 0);
int hour_of_day(std::int64_t epoch_seconds, int utc_offset_hours = 0);

}  // namespace radiomap
