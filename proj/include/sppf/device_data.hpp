// Copyright 2026 The sppf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Bundled coupling maps for IBM Quantum devices, stored in the same edge-list
// text format accepted for user-supplied topology files, so they go through
// the same parser and validation.
//
// Provenance: undirected edge sets transcribed from the fake-backend
// definitions shipped with qiskit-ibm-runtime 0.23 (FakeQuitoV2,
// FakeNairobiV2, FakeGuadalupeV2, FakeMumbaiV2, FakeBrisbane). Brisbane is
// the full 127-qubit Eagle heavy-hex lattice with all 144 couplers present.

namespace sppf::device_data {

// ibmq_quito, 5 qubits (Falcon r4T).
inline constexpr const char* kQuito = R"(# ibmq_quito (5 qubits)
5
0 1
1 2
1 3
3 4
)";

// ibm_nairobi, 7 qubits (Falcon r5.11H).
inline constexpr const char* kNairobi = R"(# ibm_nairobi (7 qubits)
7
0 1
1 2
1 3
3 5
4 5
5 6
)";

// ibmq_guadalupe, 16 qubits (Falcon r4P).
inline constexpr const char* kGuadalupe = R"(# ibmq_guadalupe (16 qubits)
16
0 1
1 2
1 4
2 3
3 5
4 7
5 8
6 7
7 10
8 9
8 11
10 12
11 14
12 13
12 15
13 14
)";

// ibmq_mumbai, 27 qubits (Falcon r5.1).
inline constexpr const char* kMumbai = R"(# ibmq_mumbai (27 qubits)
27
0 1
1 2
1 4
2 3
3 5
4 7
5 8
6 7
7 10
8 9
8 11
10 12
11 14
12 13
12 15
13 14
14 16
15 18
16 19
17 18
18 21
19 20
19 22
21 23
22 25
23 24
24 25
25 26
)";

// ibm_brisbane, 127 qubits (Eagle r3 heavy-hex).
inline constexpr const char* kBrisbane = R"(# ibm_brisbane (127 qubits)
127
0 1
1 2
2 3
3 4
4 5
5 6
6 7
7 8
8 9
9 10
10 11
11 12
12 13
18 19
19 20
20 21
21 22
22 23
23 24
24 25
25 26
26 27
27 28
28 29
29 30
30 31
31 32
37 38
38 39
39 40
40 41
41 42
42 43
43 44
44 45
45 46
46 47
47 48
48 49
49 50
50 51
56 57
57 58
58 59
59 60
60 61
61 62
62 63
63 64
64 65
65 66
66 67
67 68
68 69
69 70
75 76
76 77
77 78
78 79
79 80
80 81
81 82
82 83
83 84
84 85
85 86
86 87
87 88
88 89
94 95
95 96
96 97
97 98
98 99
99 100
100 101
101 102
102 103
103 104
104 105
105 106
106 107
107 108
113 114
114 115
115 116
116 117
117 118
118 119
119 120
120 121
121 122
122 123
123 124
124 125
125 126
0 14
14 18
4 15
15 22
8 16
16 26
12 17
17 30
20 33
33 39
24 34
34 43
28 35
35 47
32 36
36 51
37 52
52 56
41 53
53 60
45 54
54 64
49 55
55 68
58 71
71 77
62 72
72 81
66 73
73 85
70 74
74 89
75 90
90 94
79 91
91 98
83 92
92 102
87 93
93 106
96 109
109 114
100 110
110 118
104 111
111 122
108 112
112 126
)";

}  // namespace sppf::device_data
