#pragma once

#include <iosfwd>
#include <string>

#include "skewac/bidirected.hpp"
#include "skewac/certificate.hpp"
#include "skewac/matching.hpp"
#include "skewac/skew_graph.hpp"

namespace skewac::io {

// Text formats, LF, ASCII, 1-based ids, '#' comments.
//
// .ssg   header "ssg <p> <q>", then q lines "a <u> <v>" with node ids in
//        1..2p; the mate of v is v+p for v <= p, else v-p. Each line declares
//        the arc u->v together with its implicit mate.
// .bdg   header "bdg <n> <m>", then m lines "e <u> <du> <v> <dv>" with
//        du/dv in {+,-}: '+' leaves the endpoint, '-' enters it.
// .mug   header "mug <n> <m>", m lines "e <u> <v>", then "m <i1> <i2> ..."
//        with 1-based edge indices of the matching.

SkewGraph read_ssg(std::istream& in, const std::string& name);
void write_ssg(std::ostream& out, const SkewGraph& g);

BidirectedGraph read_bdg(std::istream& in, const std::string& name);
void write_bdg(std::ostream& out, const BidirectedGraph& g);

MatchingInstance read_mug(std::istream& in, const std::string& name);
void write_mug(std::ostream& out, const MatchingInstance& inst);

// File-language ids: nodes as in .ssg; arcs as signed 1-based pair indices,
// +j for the arc of line j as written, -j for its mate.
std::uint32_t node_to_file(NodeId v, PairId pairs);
NodeId node_from_file(std::uint32_t id, PairId pairs);
std::int64_t arc_to_file(ArcId a);
ArcId arc_from_file(std::int64_t id, ArcId arc_pairs);

// JSON-compatible structured text; node sets sorted ascending, trees as
// nested objects with "Z", "crossing_pair", "children".
std::string serialize_certificate(const Certificate& c, PairId pairs);
Certificate parse_certificate(const std::string& text, PairId pairs, ArcId arc_pairs);

}  // namespace skewac::io
