#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace dagtopo {

// The six artifact types of the corpus, in hosting-to-filesystem order.
enum class NodeType : std::uint8_t {
    Origin = 0,
    Snapshot = 1,
    Release = 2,
    Commit = 3,
    Directory = 4,
    Content = 5,
};

inline constexpr int kNodeTypeCount = 6;

inline constexpr std::array<NodeType, kNodeTypeCount> kAllNodeTypes = {
    NodeType::Origin,   NodeType::Snapshot,  NodeType::Release,
    NodeType::Commit,   NodeType::Directory, NodeType::Content,
};

std::string_view short_name(NodeType t);  // "ori", "snp", ...
std::string_view long_name(NodeType t);   // "origin", "snapshot", ...

// Accepts long names, short names, and "rev" as an alias of Commit.
std::optional<NodeType> parse_node_type(std::string_view token);

// Which directed edges (by endpoint type) the data model admits.
class EdgeTypePolicy {
public:
    // Default rules: ori->snp, snp->rel, snp->cmt, rel->cmt, cmt->cmt,
    // cmt->dir, dir->dir, dir->cnt.
    static EdgeTypePolicy standard();

    // Everything allowed; for synthetic or exploratory inputs.
    static EdgeTypePolicy permissive();

    bool allowed(NodeType src, NodeType dst) const {
        return allowed_[static_cast<int>(src)][static_cast<int>(dst)];
    }

    void set(NodeType src, NodeType dst, bool ok) {
        allowed_[static_cast<int>(src)][static_cast<int>(dst)] = ok;
    }

private:
    bool allowed_[kNodeTypeCount][kNodeTypeCount] = {};
};

}  // namespace dagtopo
