#include "denskit/geo_data.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "denskit/errors.hpp"

namespace denskit {

namespace {

// Longitude folded into [0, 360).
double normalize_lon(double lon) {
    double l = std::fmod(lon, 360.0);
    if (l < 0.0) l += 360.0;
    return l;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& field, std::size_t row, const char* name) {
    const std::string t = trim(field);
    const char* begin = t.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        std::ostringstream msg;
        msg << "row " << row << ": " << name << " is not a number: '" << field << "'";
        throw ParseError(msg.str());
    }
    return v;
}

int parse_int(const std::string& field, std::size_t row, const char* name) {
    const std::string t = trim(field);
    const char* begin = t.c_str();
    char* end = nullptr;
    const long v = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0') {
        std::ostringstream msg;
        msg << "row " << row << ": " << name << " is not an integer: '" << field << "'";
        throw ParseError(msg.str());
    }
    return static_cast<int>(v);
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

[[noreturn]] void reject(std::size_t row, const std::string& what) {
    std::ostringstream msg;
    msg << "row " << row << ": " << what;
    throw ParseError(msg.str());
}

}  // namespace

const char* region_name(RegionFilter r) {
    switch (r) {
        case RegionFilter::all: return "all";
        case RegionFilter::euphotic: return "euphotic";
        case RegionFilter::euphotic_ex_so: return "euphotic-ex-so";
        case RegionFilter::euphotic_so: return "euphotic-so";
    }
    return "all";
}

RegionFilter parse_region(const std::string& name) {
    if (name == "all") return RegionFilter::all;
    if (name == "euphotic") return RegionFilter::euphotic;
    if (name == "euphotic-ex-so") return RegionFilter::euphotic_ex_so;
    if (name == "euphotic-so") return RegionFilter::euphotic_so;
    throw Error("unknown region '" + name + "' (expected all|euphotic|euphotic-ex-so|euphotic-so)");
}

DepthTable::DepthTable(std::vector<double> levels) : levels_(std::move(levels)) {
    if (levels_.empty()) throw Error("depth table must contain at least one level");
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (!std::isfinite(levels_[i]) || levels_[i] < 0.0) {
            throw Error("depth levels must be finite and non-negative");
        }
        if (i > 0 && !(levels_[i] > levels_[i - 1])) {
            throw Error("depth levels must be strictly increasing");
        }
    }
}

const DepthTable& DepthTable::default_table() {
    static const DepthTable table{{25.0, 80.0, 155.0, 250.0, 370.0, 520.0, 705.0,
                                   930.0, 1200.0, 1520.0, 1890.0, 2310.0, 2780.0,
                                   3290.0, 3840.0, 4420.0, 5020.0, 5640.0, 6270.0}};
    return table;
}

std::size_t DepthTable::nearest_level(double depth) const {
    const auto it = std::lower_bound(levels_.begin(), levels_.end(), depth);
    if (it == levels_.begin()) return 0;
    if (it == levels_.end()) return levels_.size() - 1;
    const auto hi = static_cast<std::size_t>(it - levels_.begin());
    const std::size_t lo = hi - 1;
    // Ties resolve to the shallower level.
    return (depth - levels_[lo] <= levels_[hi] - depth) ? lo : hi;
}

CellKey cell_key(const GeoRecord& r, const DepthTable& table) {
    const auto lat_q = static_cast<int>(std::lround(r.lat / kLatCellDegrees));
    const long lon_cells = std::lround(360.0 / kLonCellDegrees);
    long lon_q = std::lround(normalize_lon(r.lon) / kLonCellDegrees) % lon_cells;
    return {lat_q, static_cast<int>(lon_q), static_cast<int>(table.nearest_level(r.depth))};
}

GeoDataset load_csv(const std::filesystem::path& path, DataSource source,
                    const ValueWindow& window) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());

    std::string line;
    if (!std::getline(in, line)) throw ParseError(path.string() + ": file is empty");
    strip_cr(line);
    if (trim(line) != "lat,lon,depth,decade,value") {
        throw ParseError(path.string() + ": expected header 'lat,lon,depth,decade,value', got '" +
                         line + "'");
    }

    GeoDataset ds;
    ds.source = source;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        strip_cr(line);
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 5) reject(row, "expected 5 fields, got " + std::to_string(fields.size()));

        GeoRecord rec;
        rec.lat = parse_double(fields[0], row, "lat");
        rec.lon = parse_double(fields[1], row, "lon");
        rec.depth = parse_double(fields[2], row, "depth");
        rec.decade = parse_int(fields[3], row, "decade");
        rec.value = parse_double(fields[4], row, "value");

        if (!std::isfinite(rec.lat) || rec.lat < -90.0 || rec.lat > 90.0) {
            reject(row, "lat out of [-90, 90]");
        }
        if (!std::isfinite(rec.lon) || rec.lon < -180.0 || rec.lon >= 360.0) {
            reject(row, "lon out of [-180, 360)");
        }
        if (!std::isfinite(rec.depth) || rec.depth < 0.0) reject(row, "depth must be >= 0");
        if (!std::isfinite(rec.value)) reject(row, "value is not finite");
        if (rec.value < window.lo || rec.value > window.hi) {
            std::ostringstream what;
            what << "value " << rec.value << " outside plausibility window [" << window.lo << ", "
                 << window.hi << "]";
            reject(row, what.str());
        }
        ds.records.push_back(rec);
    }
    if (ds.records.empty()) throw EmptyResultError(path.string() + ": no data rows");
    return ds;
}

DepthTable load_depth_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<double> levels;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        strip_cr(line);
        if (trim(line).empty()) continue;
        levels.push_back(parse_double(line, row, "depth level"));
    }
    if (levels.empty()) throw ParseError(path.string() + ": no depth levels");
    return DepthTable(std::move(levels));
}

GeoDataset decade_mean(const GeoDataset& ds, int decade, const DepthTable& table) {
    struct Accum {
        double lat = 0.0, lon_delta = 0.0, depth = 0.0, value = 0.0;
        std::size_t count = 0;
    };
    std::map<CellKey, Accum> cells;
    for (const GeoRecord& r : ds.records) {
        if (r.decade != decade) continue;
        const CellKey key = cell_key(r, table);
        Accum& acc = cells[key];
        acc.lat += r.lat;
        // Longitude accumulates as offset from the cell center so cells
        // straddling the 0/360 wrap average correctly.
        const double center = key.lon_q * kLonCellDegrees;
        acc.lon_delta += std::remainder(normalize_lon(r.lon) - center, 360.0);
        acc.depth += r.depth;
        acc.value += r.value;
        acc.count += 1;
    }
    if (cells.empty()) {
        throw EmptyResultError("no records in decade " + std::to_string(decade));
    }

    GeoDataset out;
    out.source = ds.source;
    out.records.reserve(cells.size());
    for (const auto& [key, acc] : cells) {
        const auto n = static_cast<double>(acc.count);
        GeoRecord rec;
        rec.lat = acc.lat / n;
        rec.lon = normalize_lon(key.lon_q * kLonCellDegrees + acc.lon_delta / n);
        rec.depth = acc.depth / n;
        rec.decade = decade;
        rec.value = acc.value / n;
        out.records.push_back(rec);
    }
    return out;
}

GeoDataset apply_region(const GeoDataset& ds, RegionFilter region) {
    GeoDataset out;
    out.source = ds.source;
    for (const GeoRecord& r : ds.records) {
        bool keep = true;
        switch (region) {
            case RegionFilter::all: keep = true; break;
            case RegionFilter::euphotic: keep = r.depth <= kEuphoticDepthMeters; break;
            case RegionFilter::euphotic_ex_so:
                keep = r.depth <= kEuphoticDepthMeters && r.lat > kSouthernOceanLatDegrees;
                break;
            case RegionFilter::euphotic_so:
                keep = r.depth <= kEuphoticDepthMeters && r.lat <= kSouthernOceanLatDegrees;
                break;
        }
        if (keep) out.records.push_back(r);
    }
    if (out.records.empty()) {
        throw EmptyResultError(std::string("region '") + region_name(region) +
                               "' removed every record");
    }
    return out;
}

std::pair<GeoDataset, GeoDataset> mask_common(const GeoDataset& model, const GeoDataset& field,
                                              const DepthTable& table) {
    const auto index_by_cell = [&table](const GeoDataset& ds) {
        std::map<CellKey, std::size_t> index;
        for (std::size_t i = 0; i < ds.records.size(); ++i) {
            const CellKey key = cell_key(ds.records[i], table);
            if (!index.emplace(key, i).second) {
                throw Error("mask_common requires decade-averaged input (duplicate cell found)");
            }
        }
        return index;
    };
    const auto model_index = index_by_cell(model);
    const auto field_index = index_by_cell(field);

    GeoDataset model_out{ {}, model.source };
    GeoDataset field_out{ {}, field.source };
    for (const auto& [key, mi] : model_index) {
        const auto fi = field_index.find(key);
        if (fi == field_index.end()) continue;
        model_out.records.push_back(model.records[mi]);
        field_out.records.push_back(field.records[fi->second]);
    }
    if (model_out.records.empty()) {
        throw EmptyIntersectionError("no grid cell holds both model and field data");
    }
    return {std::move(model_out), std::move(field_out)};
}

Sample1D extract_values(const GeoDataset& ds, const DepthTable& table) {
    if (ds.records.empty()) throw EmptyResultError("cannot extract values from an empty dataset");
    std::vector<std::size_t> order(ds.records.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return cell_key(ds.records[a], table) < cell_key(ds.records[b], table);
    });
    std::vector<double> values(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) values[i] = ds.records[order[i]].value;
    return Sample1D(std::move(values));
}

}  // namespace denskit
