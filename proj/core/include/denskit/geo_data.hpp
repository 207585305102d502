#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "denskit/grid.hpp"

namespace denskit {

/// Grid-cell extents of the target circulation model: 1.8 deg latitude by
/// 3.6 deg longitude.
inline constexpr double kLatCellDegrees = 1.8;
inline constexpr double kLonCellDegrees = 3.6;

/// Euphotic zone: the uppermost 130 m (inclusive).
inline constexpr double kEuphoticDepthMeters = 130.0;

/// Southern Ocean boundary; the boundary latitude itself counts as south.
inline constexpr double kSouthernOceanLatDegrees = -45.0;

/// One gridded tracer value: position, decade label (first year, e.g. 1990
/// for the 1990s) and the tracer value in permil.
struct GeoRecord {
    double lat = 0.0;
    double lon = 0.0;
    double depth = 0.0;
    int decade = 0;
    double value = 0.0;
};

enum class DataSource { model, field };

struct GeoDataset {
    std::vector<GeoRecord> records;
    DataSource source = DataSource::model;
};

enum class RegionFilter { all, euphotic, euphotic_ex_so, euphotic_so };

const char* region_name(RegionFilter r);

/// Parses the lowercase hyphenated names used on the command line
/// (all, euphotic, euphotic-ex-so, euphotic-so).
RegionFilter parse_region(const std::string& name);

/// Monotone table of vertical layer depths (meters). Records are keyed by
/// the nearest level; ties resolve to the shallower one.
class DepthTable {
public:
    explicit DepthTable(std::vector<double> levels);

    /// 19 levels increasing with depth, matching the coarse geometry of the
    /// target model. Override per dataset with load_depth_table().
    static const DepthTable& default_table();

    std::size_t nearest_level(double depth) const;
    const std::vector<double>& levels() const { return levels_; }

private:
    std::vector<double> levels_;
};

/// Quantized grid-cell identity. Longitude is normalized to [0, 360) before
/// quantization so that -170 and 190 identify the same cell.
struct CellKey {
    int lat_q = 0;
    int lon_q = 0;
    int depth_q = 0;

    friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

CellKey cell_key(const GeoRecord& r, const DepthTable& table = DepthTable::default_table());

/// Accepted tracer values; the default [-60, 0] permil rejects corrupt rows
/// without constraining any plausible ocean value.
struct ValueWindow {
    double lo = -60.0;
    double hi = 0.0;
};

/// Reads a gridded tracer CSV with header lat,lon,depth,decade,value.
/// Any malformed, non-finite or out-of-window row fails the load with a
/// row-numbered ParseError (rows count from 1 at the header).
GeoDataset load_csv(const std::filesystem::path& path, DataSource source,
                    const ValueWindow& window = {});

/// Reads one strictly increasing depth (meters) per line.
DepthTable load_depth_table(const std::filesystem::path& path);

/// Restricts to the given decade and collapses each grid cell to a single
/// record holding the arithmetic mean of value and of the coordinates.
/// Output is sorted by cell key. Throws EmptyResultError when the decade has
/// no records.
GeoDataset decade_mean(const GeoDataset& ds, int decade,
                       const DepthTable& table = DepthTable::default_table());

/// Keeps records matching the region. Throws EmptyResultError when nothing
/// survives.
GeoDataset apply_region(const GeoDataset& ds, RegionFilter region);

/// Restricts both datasets to the grid cells where both have a record.
/// Requires decade-averaged inputs (one record per cell); the two outputs
/// always have equal record counts. Throws EmptyIntersectionError when no
/// cell is shared.
std::pair<GeoDataset, GeoDataset> mask_common(const GeoDataset& model, const GeoDataset& field,
                                              const DepthTable& table = DepthTable::default_table());

/// The value column as a sample, ordered by cell key (ties keep input order).
Sample1D extract_values(const GeoDataset& ds,
                        const DepthTable& table = DepthTable::default_table());

}  // namespace denskit
