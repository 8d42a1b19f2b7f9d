#pragma once

// Planar link diagrams in PD form: crossings are quadruples of edge ids
// listed counterclockwise starting from the incoming under-strand.
// Values are immutable after construction; all operations are pure.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace sts {

struct DiagramError : std::runtime_error {
    explicit DiagramError(const std::string& what) : std::runtime_error(what) {}
};

struct Crossing {
    std::array<int, 4> e;  // slot 0 = incoming under, then CCW
    bool operator==(const Crossing& o) const { return e == o.e; }
};

struct CrossingSite {
    int index = 0;
    int resolution_label = 0;  // 0 or 1
};

class PlanarDiagram {
  public:
    PlanarDiagram() : free_loops_(0) {}  // empty diagram (no components)

    static PlanarDiagram unknot();

    PlanarDiagram(std::vector<Crossing> crossings, int free_loops = 0, std::string name = "");

    static PlanarDiagram parse(const std::string& pd_text);
    static PlanarDiagram from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    std::string pd_string() const;

    // raw assembly with explicit markings (used by diagram surgery)
    static PlanarDiagram assemble(std::vector<Crossing> cs, int free_loops,
                                  std::vector<bool> loop_dots, std::set<int> edge_dots,
                                  std::optional<int> base_point, std::string name);

    // --- raw data -----------------------------------------------------------

    int crossing_count() const { return (int)crossings_.size(); }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    int free_loop_count() const { return free_loops_; }
    const std::vector<bool>& loop_dots() const { return loop_dots_; }
    const std::set<int>& dotted_edges() const { return edge_dots_; }
    std::optional<int> base_point() const { return base_point_; }
    const std::string& name() const { return name_; }

    PlanarDiagram with_name(std::string n) const;
    PlanarDiagram with_base_point(int edge) const;
    PlanarDiagram with_edge_dot(int edge) const;

    // --- orientation and signs ----------------------------------------------

    // slot (1 or 3) where the over-strand enters crossing ci
    int over_in_slot(int ci) const { return over_in_[ci]; }
    int crossing_sign(int ci) const { return over_in_[ci] == 3 ? 1 : -1; }
    int positive_crossings() const { return n_pos_; }
    int negative_crossings() const { return n_neg_; }
    int writhe() const { return n_pos_ - n_neg_; }

    // --- components and connectivity ----------------------------------------

    // strand components first (ordered by smallest edge id), then free loops
    int component_count() const { return (int)comp_min_edge_.size() + free_loops_; }
    int strand_component_count() const { return (int)comp_min_edge_.size(); }
    int component_of_edge(int edge) const;
    bool edge_exists(int edge) const { return occ_.count(edge) > 0; }
    std::vector<int> edges() const;  // sorted
    // component index -> carries a dot
    bool component_dotted(int comp) const;
    bool connected() const;  // one connected piece in the plane

    // --- faces and checkerboard colouring ------------------------------------

    struct Faces {
        // each face is a cyclic list of (crossing, slot) corners; the corner
        // (c, s) stands for the quadrant between slots s and s+1 of c
        std::vector<std::vector<std::pair<int, int>>> faces;
        std::vector<std::array<int, 4>> quad_face;  // crossing -> face id per quadrant
        int count() const { return (int)faces.size(); }
    };
    Faces faces() const;  // throws for disconnected diagrams

    struct Checkerboard {
        Faces faces;
        std::vector<int> color;  // per face: 0 or 1
        int white = 0;           // which color counts as white
        std::vector<int> white_faces;         // face ids, ascending
        std::vector<int> eta;                 // per crossing, +-1 w.r.t. white
        std::vector<std::array<int, 2>> white_pair;  // per crossing: the two white face ids
        std::vector<bool> type2;              // per crossing, Gordon-Litherland type II
    };
    Checkerboard checkerboard(bool swap_colors = false) const;

    // --- diagram operations ---------------------------------------------------

    PlanarDiagram mirrored() const;
    PlanarDiagram resolved(const CrossingSite& site) const;
    PlanarDiagram simplified() const;  // greedy R1/R2 reduction
    static PlanarDiagram connected_sum(const PlanarDiagram& a, const PlanarDiagram& b);

    bool alternating() const;
    bool unlink(int k) const;  // recognizes crossing-free unlinks after simplification
    // recognizes the k-component unlink with a dot on every component
    bool dotted_unlink(int k) const;

    // relabel-minimal encoding; equal codes imply equal diagrams up to
    // relabeling and component re-orientation
    std::string canonical_code() const;

    bool operator==(const PlanarDiagram& o) const {
        return crossings_ == o.crossings_ && free_loops_ == o.free_loops_;
    }

  private:
    std::vector<Crossing> crossings_;
    int free_loops_ = 0;
    std::vector<bool> loop_dots_;
    std::set<int> edge_dots_;
    std::optional<int> base_point_;
    std::string name_;

    // derived on construction
    std::map<int, std::vector<std::pair<int, int>>> occ_;  // edge -> occurrences (ci, slot)
    std::vector<int> over_in_;                             // per crossing: 1 or 3
    int n_pos_ = 0, n_neg_ = 0;
    std::map<int, int> edge_comp_;       // edge -> strand component index
    std::vector<int> comp_min_edge_;     // per strand component

    void validate_and_orient();
    friend class DiagramBuilder;
};

}  // namespace sts
