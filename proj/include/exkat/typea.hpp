#pragma once

// Cluster categories of type A_n through the polygon model. Arcs of the
// (n+3)-gon are the indecomposables; Hom spaces and composition come from the
// mesh category of ZA_n taken modulo F = tau^-1 [1].

#include "exkat/cattable.hpp"

#include <map>
#include <string>
#include <vector>

namespace exkat {

struct Arc {
    int i = 0; ///< 1-based polygon vertex, i < j
    int j = 0;
    bool operator==(const Arc&) const = default;
    auto operator<=>(const Arc&) const = default;
};

using Triangulation = std::vector<Arc>;

inline constexpr int kDefaultRankBound = 8;

/// All diagonals of the (n+3)-gon in lexicographic order.
std::vector<Arc> polygon_arcs(int n);
bool crosses(const Arc& a, const Arc& b);
/// Rotation (i,j) -> (i+k, j+k) on the N-gon.
Arc rotate_arc(const Arc& a, int k, int polygon);
/// "ij" for polygons with at most 9 vertices, "i-j" otherwise.
std::string arc_label(const Arc& a, int polygon);
/// Accepts "ij", "ji", "i-j" and "j-i"; rejects sides and out-of-range vertices.
Arc parse_arc(const std::string& s, int polygon);

/// Table with one indecomposable per arc, id = arc label; every structure
/// constant lies in {0,1} and the registry holds both exchange triangles of
/// every crossing pair.
CatTable gen_cluster_A(int n, int bound = kDefaultRankBound);

/// Rank n of a table produced by gen_cluster_A, recovered from its size.
int cluster_rank(const CatTable& t);
Arc arc_of(const CatTable& t, int index);
int index_of_arc(const CatTable& t, const Arc& a);

std::vector<Triangulation> enumerate_triangulations(int n);
std::vector<int> triangulation_indices(const CatTable& t, const Triangulation& tri);

struct PentagonFixture {
    CatTable table;
    std::map<std::string, std::string> name_of_arc; ///< arc label -> module name
    std::map<std::string, std::string> arc_of_name; ///< module name -> arc label
    int by_name(const std::string& module) const { return table.index_of(arc_of_name.at(module)); }
};

/// gen_cluster_A(2) with the module names of the quiver 1 -> 2:
/// 14 = 2, 13 = 1/2, 35 = 1, 25 = 2[1], 24 = (1/2)[1].
PentagonFixture pentagon_fixture();

/// Comma separated arc labels (generated tables) or ids (file tables).
std::vector<int> parse_subcat(const CatTable& t, const std::string& csv);

} // namespace exkat
