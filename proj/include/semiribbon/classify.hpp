#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semiribbon/oriented_map.hpp"
#include "semiribbon/ribbon.hpp"
#include "semiribbon/surgery.hpp"

namespace semiribbon {

// A cut vertex of the cactus and the disks meeting there.
struct SharedVertex {
    Dart vertex;                     // least dart of the vertex
    std::vector<std::size_t> disks;  // indices into CactusDecomposition::disks
};

struct CactusDecomposition {
    std::vector<DirectedCycle> disks;  // each from its least dart, sorted
    std::vector<std::size_t> disk_lengths() const;
    std::vector<Dart> disk_faces;      // face of each disk in the input map
    std::vector<SharedVertex> shared_vertices;
    std::vector<FaceDecoration> summand_faces;
    Orientation orientation = Orientation::S;
};

std::optional<CactusDecomposition> recognize_cactus_boundary(const OrientedMap& map);

struct SurgeryStep {
    enum class Kind { Cut, Shrink };
    Kind kind = Kind::Shrink;
    std::vector<Dart> darts;           // cut: cycle; shrink: boundary walk (working ids)
    Dart face = kNoDart;               // shrink: face representative (working ids)
    std::vector<Dart> original_edges;  // the same edges as forward darts of the input
    bool discarded_left = false;       // cut: which copy was dropped
};

struct ClassificationResult {
    SemiRibbonStatus status = SemiRibbonStatus::NotHyperbolic;
    std::optional<CactusDecomposition> decomposition;
    std::vector<SurgeryStep> surgery_log;
    std::vector<std::string> contradictions;  // theorem-violation flags

    bool contradiction() const { return !contradictions.empty(); }
};

ClassificationResult classify(const OrientedMap& map);

// Re-applies the log to the input; true when it ends empty or at a clockwise cactus.
bool replay_surgery_log(const OrientedMap& map, const ClassificationResult& result);

struct CactusSpec {
    unsigned length = 1;
    std::optional<unsigned> at;  // position on the parent cycle
    std::vector<CactusSpec> children;
};

CactusSpec cactus_spec_from_json(const nlohmann::json& j);
nlohmann::ordered_json cactus_spec_to_json(const CactusSpec& spec);

OrientedMap generate_cactus(const CactusSpec& spec);

// Canonical string of the disk / shared-vertex tree with disk lengths.
std::string cactus_tree_signature(const CactusSpec& spec);
std::string cactus_tree_signature(const CactusDecomposition& dec);

}  // namespace semiribbon
