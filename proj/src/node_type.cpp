#include "dagtopo/node_type.hpp"

namespace dagtopo {

std::string_view short_name(NodeType t) {
    switch (t) {
        case NodeType::Origin: return "ori";
        case NodeType::Snapshot: return "snp";
        case NodeType::Release: return "rel";
        case NodeType::Commit: return "cmt";
        case NodeType::Directory: return "dir";
        case NodeType::Content: return "cnt";
    }
    return "?";
}

std::string_view long_name(NodeType t) {
    switch (t) {
        case NodeType::Origin: return "origin";
        case NodeType::Snapshot: return "snapshot";
        case NodeType::Release: return "release";
        case NodeType::Commit: return "commit";
        case NodeType::Directory: return "directory";
        case NodeType::Content: return "content";
    }
    return "?";
}

std::optional<NodeType> parse_node_type(std::string_view token) {
    if (token == "ori" || token == "origin") return NodeType::Origin;
    if (token == "snp" || token == "snapshot") return NodeType::Snapshot;
    if (token == "rel" || token == "release") return NodeType::Release;
    // "rev" is the SWHID spelling for a revision, i.e. a commit.
    if (token == "cmt" || token == "commit" || token == "rev") return NodeType::Commit;
    if (token == "dir" || token == "directory") return NodeType::Directory;
    if (token == "cnt" || token == "content") return NodeType::Content;
    return std::nullopt;
}

EdgeTypePolicy EdgeTypePolicy::standard() {
    EdgeTypePolicy p;
    p.set(NodeType::Origin, NodeType::Snapshot, true);
    p.set(NodeType::Snapshot, NodeType::Release, true);
    p.set(NodeType::Snapshot, NodeType::Commit, true);
    p.set(NodeType::Release, NodeType::Commit, true);
    p.set(NodeType::Commit, NodeType::Commit, true);
    p.set(NodeType::Commit, NodeType::Directory, true);
    p.set(NodeType::Directory, NodeType::Directory, true);
    p.set(NodeType::Directory, NodeType::Content, true);
    return p;
}

EdgeTypePolicy EdgeTypePolicy::permissive() {
    EdgeTypePolicy p;
    for (NodeType s : kAllNodeTypes)
        for (NodeType d : kAllNodeTypes) p.set(s, d, true);
    return p;
}

}  // namespace dagtopo
