#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gsum/hash128.hpp"

namespace gsum {

using LabelId = std::uint32_t;
using LabelSetId = std::uint32_t;

struct TransparentStringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
};

/// Interns label strings to dense ids and sorted label-id sequences to dense
/// set ids. The same set of labels maps to the same set id regardless of
/// insertion order. Set id 0 is always the empty set.
class LabelInterner {
public:
    static constexpr LabelSetId kEmptySet = 0;

    LabelInterner();

    LabelId intern_label(std::string_view name);
    std::optional<LabelId> find_label(std::string_view name) const;
    const std::string& label_name(LabelId id) const;
    std::size_t label_count() const { return names_.size(); }

    /// Sorts and dedupes `labels`, then interns the canonical sequence.
    LabelSetId intern_set(std::vector<LabelId> labels);
    std::span<const LabelId> set_members(LabelSetId id) const;
    std::size_t set_count() const { return sets_.size(); }

private:
    struct SetHash {
        std::size_t operator()(const std::vector<LabelId>& v) const noexcept {
            Hash128 h = hash_bytes(v.data(), v.size() * sizeof(LabelId));
            return Hash128Hasher{}(h);
        }
    };

    std::vector<std::string> names_;
    std::unordered_map<std::string, LabelId, TransparentStringHash, std::equal_to<>> name_to_id_;
    std::vector<std::vector<LabelId>> sets_;
    std::unordered_map<std::vector<LabelId>, LabelSetId, SetHash> set_to_id_;
};

/// Separate interning namespaces for vertex and edge labels.
struct LabelDictionary {
    LabelInterner vertex;
    LabelInterner edge;
};

}  // namespace gsum
