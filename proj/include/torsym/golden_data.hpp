#pragma once

// Embedded copy of data/golden_tables.csv; a unit test keeps the two in
// sync so the library works without a runtime data path.

#include <string_view>

namespace torsym {

inline constexpr std::string_view kGoldenTablesCsv = R"CSV(# torsym golden isotropy tables, version 1
# format: row;kind;index;value
# kinds: area = Area(|P_R|)/Area(Lambda_t); face/vertex/edge/edgeint =
#        stabilizer labels; vrel = vertex orbit partition of P_R;
#        vorbits = |V/R|; eorbits = |E/R|; note = recorded discrepancy
#        against the published tables (not diffed).
Z2;area;;1/2
Z2;face;;id
Z2;vertex;0;Z2
Z2;vertex;1;Z2
Z2;vertex;2;Z2
Z2;vertex;3;Z2
Z2;edge;0;id
Z2;edge;1;Z2
Z2;edge;2;id
Z2;edge;3;Z2
Z2;edgeint;0;id
Z2;edgeint;1;id
Z2;edgeint;2;id
Z2;edgeint;3;id
Z2;vrel;;0 3|1 2
Z2;vorbits;;2
Z2;eorbits;;3
D2,2;area;;1/4
D2,2;face;;id
D2,2;vertex;0;D2,2
D2,2;vertex;1;D1,-4
D2,2;vertex;2;D1,-4
D2,2;vertex;3;D2,2
D2,2;edge;0;D1,-4
D2,2;edge;1;Z2
D2,2;edge;2;D1,-4
D2,2;edge;3;D1,4
D2,2;edgeint;0;D1,-4
D2,2;edgeint;1;id
D2,2;edgeint;2;D1,-4
D2,2;edgeint;3;D1,4
D2,2;vrel;;0|1 2|3
D2,2;vorbits;;3
D2,2;eorbits;;4
D2;area;;1/4
D2;face;;id
D2;vertex;0;D2
D2;vertex;1;D2
D2;vertex;2;D2
D2;vertex;3;D2
D2;edge;0;D1,2
D2;edge;1;D1
D2;edge;2;D1,2
D2;edge;3;D1
D2;edgeint;0;D1,2
D2;edgeint;1;D1
D2;edgeint;2;D1,2
D2;edgeint;3;D1
D2;vrel;;0|1|2|3
D2;vorbits;;4
D2;eorbits;;4
Z4;area;;1/4
Z4;face;;id
Z4;vertex;0;Z4
Z4;vertex;1;Z2
Z4;vertex;2;Z4
Z4;vertex;3;Z2
Z4;edge;0;id
Z4;edge;1;id
Z4;edge;2;id
Z4;edge;3;id
Z4;edgeint;0;id
Z4;edgeint;1;id
Z4;edgeint;2;id
Z4;edgeint;3;id
Z4;vrel;;0|1 3|2
Z4;vorbits;;3
Z4;eorbits;;2
D4;area;;1/4
D4;face;;D1,4
D4;vertex;0;D4
D4;vertex;1;D2
D4;vertex;2;D4
D4;vertex;3;D2
D4;edge;0;D1,2
D4;edge;1;D1
D4;edge;2;D1,2
D4;edge;3;D1
D4;edgeint;0;D1,2
D4;edgeint;1;D1
D4;edgeint;2;D1,2
D4;edgeint;3;D1
D4;vrel;;0|1 3|2
D4;vorbits;;3
D4;eorbits;;2
D2~;area;;1/4
D2~;face;;id
D2~;vertex;0;D2
D2~;vertex;1;D2
D2~;vertex;2;D1
D2~;vertex;3;D1
D2~;edge;0;D1,2
D2~;edge;1;D1
D2~;edge;2;Z2
D2~;edge;3;D1
D2~;edgeint;0;D1,2
D2~;edgeint;1;D1
D2~;edgeint;2;id
D2~;edgeint;3;D1
D2~;vrel;;0|1|2 3
D2~;vorbits;;3
D2~;eorbits;;4
D2,3;area;;1/4
D2,3;face;;id
D2,3;vertex;0;D2,3
D2,3;vertex;1;D1,-3
D2,3;vertex;2;D1,-3
D2,3;vertex;3;D2,3
D2,3;edge;0;D1,-3
D2,3;edge;1;Z2
D2,3;edge;2;D1,-3
D2,3;edge;3;D1,6
D2,3;edgeint;0;D1,-3
D2,3;edgeint;1;id
D2,3;edgeint;2;D1,-3
D2,3;edgeint;3;D1,6
D2,3;vrel;;0|1 2|3
D2,3;vorbits;;3
D2,3;eorbits;;4
D3;area;;1/2
D3;face;;Z3
D3;vertex;0;D3
D3;vertex;1;D3
D3;vertex;2;D3
D3;edge;0;D1,3
D3;edge;1;D1,-3
D3;edge;2;D1
D3;edgeint;0;D1,3
D3;edgeint;1;D1,-3
D3;edgeint;2;D1
D3;vrel;;0 1 2
D3;vorbits;;1
D3;eorbits;;1
Z6;area;;1/2
Z6;face;;Z3
Z6;vertex;0;Z6
Z6;vertex;1;Z6
Z6;vertex;2;Z6
Z6;edge;0;Z2
Z6;edge;1;Z2
Z6;edge;2;Z2
Z6;edgeint;0;id
Z6;edgeint;1;id
Z6;edgeint;2;id
Z6;vrel;;0 1 2
Z6;vorbits;;1
Z6;eorbits;;1
D6;area;;1/2
D6;face;;D3,2
D6;vertex;0;D6
D6;vertex;1;D6
D6;vertex;2;D6
D6;edge;0;D2,3/2
D6;edge;1;D2,-3/2
D6;edge;2;D2
D6;edgeint;0;D1,3
D6;edgeint;1;D1,-3
D6;edgeint;2;D1
D6;vrel;;0 1 2
D6;vorbits;;1
D6;eorbits;;1
Z3;area;;1
Z3;face;;Z3
Z3;vertex;0;Z3
Z3;vertex;1;Z3
Z3;vertex;2;Z3
Z3;vertex;3;Z3
Z3;vertex;4;Z3
Z3;vertex;5;Z3
Z3;edge;0;id
Z3;edge;1;id
Z3;edge;2;id
Z3;edge;3;id
Z3;edge;4;id
Z3;edge;5;id
Z3;edgeint;0;id
Z3;edgeint;1;id
Z3;edgeint;2;id
Z3;edgeint;3;id
Z3;edgeint;4;id
Z3;edgeint;5;id
Z3;vrel;;0 2 4|1 3 5
Z3;vorbits;;2
Z3;eorbits;;1
D3,2;area;;1
D3,2;face;;D3,2
D3,2;vertex;0;D3,2
D3,2;vertex;1;D3,2
D3,2;vertex;2;D3,2
D3,2;vertex;3;D3,2
D3,2;vertex;4;D3,2
D3,2;vertex;5;D3,2
D3,2;edge;0;D1,2
D3,2;edge;1;D1,6
D3,2;edge;2;D1,-6
D3,2;edge;3;D1,2
D3,2;edge;4;D1,6
D3,2;edge;5;D1,-6
D3,2;edgeint;0;D1,2
D3,2;edgeint;1;D1,6
D3,2;edgeint;2;D1,-6
D3,2;edgeint;3;D1,2
D3,2;edgeint;4;D1,6
D3,2;edgeint;5;D1,-6
D3,2;vrel;;0 2 4|1 3 5
D3,2;vorbits;;2
D3,2;eorbits;;1
id;area;;1
id;face;;id
id;vertex;0;id
id;vertex;1;id
id;vertex;2;id
id;vertex;3;id
id;edge;0;id
id;edge;1;id
id;edge;2;id
id;edge;3;id
id;edgeint;0;id
id;edgeint;1;id
id;edgeint;2;id
id;edgeint;3;id
id;vrel;;0 1 2 3
id;vorbits;;1
id;eorbits;;2
D1|c0;area;;1/2
D1|c0;face;;id
D1|c0;vertex;0;D1
D1|c0;vertex;1;D1
D1|c0;vertex;2;D1
D1|c0;vertex;3;D1
D1|c0;edge;0;id
D1|c0;edge;1;D1
D1|c0;edge;2;id
D1|c0;edge;3;D1
D1|c0;edgeint;0;id
D1|c0;edgeint;1;D1
D1|c0;edgeint;2;id
D1|c0;edgeint;3;D1
D1|c0;vrel;;0 3|1 2
D1|c0;vorbits;;2
D1|c0;eorbits;;3
D1,4|c0;area;;1/2
D1,4|c0;face;;id
D1,4|c0;vertex;0;D1,4
D1,4|c0;vertex;1;D1,4
D1,4|c0;vertex;2;D1,4
D1,4|c0;vertex;3;D1,4
D1,4|c0;edge;0;id
D1,4|c0;edge;1;D1,4
D1,4|c0;edge;2;id
D1,4|c0;edge;3;D1,4
D1,4|c0;edgeint;0;id
D1,4|c0;edgeint;1;D1,4
D1,4|c0;edgeint;2;id
D1,4|c0;edgeint;3;D1,4
D1,4|c0;vrel;;0 2|1 3
D1,4|c0;vorbits;;2
D1,4|c0;eorbits;;3
D1|l0;area;;1/2
D1|l0;face;;id
D1|l0;vertex;0;id
D1|l0;vertex;1;id
D1|l0;vertex;2;id
D1|l0;vertex;3;id
D1|l0;edge;0;id
D1|l0;edge;1;id
D1|l0;edge;2;id
D1|l0;edge;3;id
D1|l0;edgeint;0;id
D1|l0;edgeint;1;id
D1|l0;edgeint;2;id
D1|l0;edgeint;3;id
D1|l0;vrel;;0 1 2 3
D1|l0;vorbits;;1
D1|l0;eorbits;;2
D1,4|l0;area;;1/2
D1,4|l0;face;;id
D1,4|l0;vertex;0;D1,4
D1,4|l0;vertex;1;D1,4
D1,4|l0;vertex;2;D1,4
D1,4|l0;vertex;3;D1,4
D1,4|l0;edge;0;id
D1,4|l0;edge;1;D1,4
D1,4|l0;edge;2;id
D1,4|l0;edge;3;D1,4
D1,4|l0;edgeint;0;id
D1,4|l0;edgeint;1;D1,4
D1,4|l0;edgeint;2;id
D1,4|l0;edgeint;3;D1,4
D1,4|l0;vrel;;0 2|1 3
D1,4|l0;vorbits;;2
D1,4|l0;eorbits;;3
D4;note;face;published table lists D1,4 while the proof text reads D1,2 -- the stabilizer oracle confirms D1,4
D2,2;note;edge;published table pairs e1 with e3 as D1,4 -- the oracle gives Z2 at e1 (the half-turn about (0,1/2) that also realizes v1 ~ v2) and D1,4 at e3
D2,2;note;path;published one-dimensional domain is the vertex loop [v0,v1,v2,v3,v0]; with the oracle value Z2 at b(e1) the construction rule takes half of e1, giving [b(e1),v2,v3,v0,v1] as stored here
)CSV";

}  // namespace torsym
