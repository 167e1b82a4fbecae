#include "hha/heisenberg.hpp"

#include <cstdlib>

#include "json.hpp"

namespace hha {

namespace {

std::string key_str(const CocycleTable::Key& k) {
    return "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
           std::to_string(k[2]) + "," + std::to_string(k[3]) + ")";
}

}  // namespace

CocycleTable CocycleTable::hyperelliptic(const Rat& omega1, int max_mode) {
    if (omega1 <= 0) throw std::invalid_argument("omega1 must be positive");
    if (max_mode < 1) throw std::invalid_argument("max_mode must be >= 1");
    CocycleTable t;
    t.sector_count_ = 1;
    t.band_width_ = 0;
    t.max_mode_ = max_mode;
    for (int m = 1; m <= max_mode; ++m) {
        Rat v = Rat(m) * omega1;
        t.entries_[{1, 1, m, -m}] = v;
        t.entries_[{1, 1, -m, m}] = -v;
    }
    return t;
}

CocycleTable CocycleTable::from_records(int sector_count, int band_width, int max_mode,
                                        const std::vector<Record>& records,
                                        bool complete_skew) {
    if (sector_count < 1) throw std::invalid_argument("sector_count must be >= 1");
    if (band_width < 0) throw std::invalid_argument("band_width must be >= 0");
    if (max_mode < 1) throw std::invalid_argument("max_mode must be >= 1");
    CocycleTable t;
    t.sector_count_ = sector_count;
    t.band_width_ = band_width;
    t.max_mode_ = max_mode;
    for (const auto& [i, j, m, n, v] : records) {
        if (i < 1 || i > sector_count || j < 1 || j > sector_count)
            throw std::out_of_range("sector index out of range in cocycle record");
        if (v == 0) continue;
        t.entries_[{i, j, m, n}] = v;
        // last record wins, in both directions
        if (complete_skew) t.entries_[{j, i, n, m}] = -v;
    }
    return t;
}

CocycleTable CocycleTable::load(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("cocycle file: ") + e.what());
    }
    try {
        const int sector_count = doc.at("sector_count").get<int>();
        const int band_width = doc.at("band_width").get<int>();
        const int max_mode = doc.at("max_mode").get<int>();
        std::vector<Record> records;
        std::size_t line = 0;
        for (const auto& rec : doc.at("entries")) {
            ++line;
            try {
                records.emplace_back(rec.at("i").get<int>(), rec.at("j").get<int>(),
                                     rec.at("m").get<int>(), rec.at("n").get<int>(),
                                     rat_parse(rec.at("value").get<std::string>()));
            } catch (const std::exception& e) {
                throw std::runtime_error("cocycle file: entry " + std::to_string(line) +
                                         ": " + e.what());
            }
        }
        CocycleTable t = from_records(sector_count, band_width, max_mode, records);
        if (doc.contains("evaluation_point"))
            t.evaluation_point_ = rat_parse(doc["evaluation_point"].get<std::string>());
        auto report = t.validate();
        if (!report.empty())
            throw std::runtime_error("cocycle file: invalid table: " + report.front());
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("cocycle file: ") + e.what());
    }
}

Rat CocycleTable::bracket(int i, int m, int j, int n) const {
    if (i < 1 || i > sector_count_ || j < 1 || j > sector_count_)
        throw std::out_of_range("sector index out of range");
    if (std::abs(m + n) > band_width_) return 0;
    if (std::abs(m) > max_mode_ || std::abs(n) > max_mode_)
        throw TruncationError("bracket key (" + std::to_string(m) + "," +
                              std::to_string(n) + ") exceeds max_mode " +
                              std::to_string(max_mode_));
    auto it = entries_.find({i, j, m, n});
    return it == entries_.end() ? Rat(0) : it->second;
}

std::vector<std::string> CocycleTable::validate() const {
    std::vector<std::string> report;
    for (const auto& [k, v] : entries_) {
        if (v == 0) continue;
        if (std::abs(k[2] + k[3]) > band_width_)
            report.push_back("band violation at " + key_str(k) + ": |m+n| > " +
                             std::to_string(band_width_));
        Key mirror{k[1], k[0], k[3], k[2]};
        auto it = entries_.find(mirror);
        const Rat mirrored = it == entries_.end() ? Rat(0) : it->second;
        if (mirrored != -v)
            report.push_back("skew-symmetry violation at " + key_str(k));
    }
    return report;
}

WeightFunctional::WeightFunctional(std::vector<Rat> b0_values, Rat c_value)
    : b0_values_(std::move(b0_values)), c_value_(std::move(c_value)) {
    if (b0_values_.empty())
        throw std::invalid_argument("weight functional needs at least one sector");
    if (c_value_ == 0)
        throw std::invalid_argument("central charge phi(c) must be non-zero");
}

const Rat& WeightFunctional::b0(int sector) const {
    if (sector < 1 || sector > static_cast<int>(b0_values_.size()))
        throw std::out_of_range("sector index out of range in weight functional");
    return b0_values_[static_cast<std::size_t>(sector - 1)];
}

}  // namespace hha
