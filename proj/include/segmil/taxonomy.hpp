// Coronary segment taxonomy, ordinal stenosis severities, and the derivation
// of binary patient/artery/segment targets.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "segmil/common.hpp"

namespace segmil {

// Ordinal encoding of the seven severity classes (percent lumen narrowing):
//   0:">=0"  1:">=20"  2:">=50"  3:">=70"  4:">=90"  5:"99"  6:"100"
// The classes are not equally spaced, so they are kept ordinal rather than
// mapped to continuous values.
struct SeverityCategory {
    int ordinal = 0;

    static constexpr int kCount = 7;

    static SeverityCategory from_ordinal(int o) {
        if (o < 0 || o >= kCount) throw InputError("SeverityCategory: ordinal out of range: " + std::to_string(o));
        return SeverityCategory{o};
    }

    static const std::array<const char*, kCount>& names() {
        static const std::array<const char*, kCount> n = {">=0", ">=20", ">=50", ">=70", ">=90", "99", "100"};
        return n;
    }

    std::string name() const { return names()[static_cast<std::size_t>(ordinal)]; }

    static SeverityCategory from_name(const std::string& s) {
        for (int i = 0; i < kCount; ++i)
            if (s == names()[static_cast<std::size_t>(i)]) return SeverityCategory{i};
        throw InputError("SeverityCategory: unknown category name: " + s);
    }

    // Geometric narrowing fraction implied by the class name; 1.0 severs the lumen.
    double narrowing_fraction() const {
        static constexpr std::array<double, kCount> f = {0.0, 0.2, 0.5, 0.7, 0.9, 0.99, 1.0};
        return f[static_cast<std::size_t>(ordinal)];
    }

    bool operator==(const SeverityCategory&) const = default;
};

// Head layout of the model and of every derived label vector:
// [CLS, RCA, LCA, seg1, seg2, seg3, seg5, seg6, seg7, seg11, seg13]
namespace taxonomy {

constexpr int kNumSegments = 16;
constexpr int kNumHeads = 11;
constexpr int kCls = 0;
constexpr int kRca = 1;
constexpr int kLca = 2;

constexpr std::array<int, 8> kMajorSegments = {1, 2, 3, 5, 6, 7, 11, 13};
constexpr std::array<int, 3> kRcaSegments = {1, 2, 3};
constexpr std::array<int, 5> kLcaSegments = {5, 6, 7, 11, 13};

// Segment ids owned by each rendered artery tree (anatomical membership,
// distinct from the supervision split above): RCA = {1,2,3,4,16}.
constexpr std::array<int, 5> kRcaTreeSegments = {1, 2, 3, 4, 16};

inline bool is_major(int seg) {
    for (int s : kMajorSegments)
        if (s == seg) return true;
    return false;
}

inline bool in_rca_tree(int seg) {
    for (int s : kRcaTreeSegments)
        if (s == seg) return true;
    return false;
}

// Head index of a major segment, or -1.
inline int head_of_segment(int seg) {
    for (std::size_t i = 0; i < kMajorSegments.size(); ++i)
        if (kMajorSegments[i] == seg) return static_cast<int>(i) + 3;
    return -1;
}

inline int segment_of_head(int head) {
    if (head < 3 || head >= kNumHeads) throw InputError("segment_of_head: not a segment head");
    return kMajorSegments[static_cast<std::size_t>(head - 3)];
}

// Parent head (RCA/LCA) of a segment head; CLS for artery heads.
inline int parent_head(int head) {
    if (head == kCls) throw InputError("parent_head: CLS has no parent");
    if (head == kRca || head == kLca) return kCls;
    const int seg = segment_of_head(head);
    for (int s : kRcaSegments)
        if (s == seg) return kRca;
    return kLca;
}

inline std::string head_name(int head) {
    static const std::array<const char*, kNumHeads> names = {"cls",  "rca",  "lca",  "seg1",  "seg2", "seg3",
                                                             "seg5", "seg6", "seg7", "seg11", "seg13"};
    if (head < 0 || head >= kNumHeads) throw InputError("head_name: bad head index");
    return names[static_cast<std::size_t>(head)];
}

}  // namespace taxonomy

// Per-patient severities for all 16 segments.
struct SegmentLabelSet {
    std::map<int, SeverityCategory> severities;

    void validate() const {
        for (int seg = 1; seg <= taxonomy::kNumSegments; ++seg)
            if (!severities.count(seg))
                throw SchemaError("SegmentLabelSet: missing segment id " + std::to_string(seg));
        if (severities.size() != taxonomy::kNumSegments)
            throw SchemaError("SegmentLabelSet: unexpected segment ids present");
    }

    SeverityCategory at(int seg) const {
        auto it = severities.find(seg);
        if (it == severities.end()) throw SchemaError("SegmentLabelSet: missing segment id " + std::to_string(seg));
        return it->second;
    }
};

// 11 binary targets ordered like the model heads.
struct LabelVector {
    std::array<std::uint8_t, taxonomy::kNumHeads> targets{};

    bool operator==(const LabelVector&) const = default;
};

// Severe iff the ordinal reaches the threshold class; the default threshold 3
// is the ">=70" class.
inline bool is_severe(SeverityCategory category, int threshold_ordinal = 3) {
    if (threshold_ordinal < 0 || threshold_ordinal >= SeverityCategory::kCount)
        throw InputError("is_severe: threshold ordinal out of range");
    return category.ordinal >= threshold_ordinal;
}

// Binary targets for all 11 heads. Artery and patient targets take the
// maximal severity over their major segments; non-major segments never
// contribute.
inline LabelVector derive_level_labels(const SegmentLabelSet& labels, int threshold_ordinal = 3) {
    labels.validate();
    LabelVector out;
    int max_rca = 0, max_lca = 0;
    for (int seg : taxonomy::kRcaSegments) max_rca = std::max(max_rca, labels.at(seg).ordinal);
    for (int seg : taxonomy::kLcaSegments) max_lca = std::max(max_lca, labels.at(seg).ordinal);
    for (int seg : taxonomy::kMajorSegments)
        out.targets[static_cast<std::size_t>(taxonomy::head_of_segment(seg))] =
            is_severe(labels.at(seg), threshold_ordinal) ? 1 : 0;
    out.targets[taxonomy::kRca] = is_severe(SeverityCategory{max_rca}, threshold_ordinal) ? 1 : 0;
    out.targets[taxonomy::kLca] = is_severe(SeverityCategory{max_lca}, threshold_ordinal) ? 1 : 0;
    out.targets[taxonomy::kCls] =
        is_severe(SeverityCategory{std::max(max_rca, max_lca)}, threshold_ordinal) ? 1 : 0;
    return out;
}

}  // namespace segmil
