// Frozen reference formulas used by the unit and acceptance suites. Each
// fixture is a term list "coef:factor,factor;..." where a factor is one
// digit per coordinate (e.g. "012" = mu_{0,1,2}); repeated factors denote
// powers.
#pragma once

namespace fixtures {

// 2D, order-2 moments: the simplest linear rotation invariant.
inline constexpr const char* kRot2D_v12 = "1:20; 1:02";

// 2D, degree-2 monomials in order-2 moments, over mu_00^4.
inline constexpr const char* kAffine2D_v22 = "1:20,02; -1:11,11";

// 2D, degree-2 monomials in order-5 moments: three rotation invariants.
inline constexpr const char* kRot2D_v25_1 =
    "3:23,23; -4:41,23; 3:32,32; -4:14,32; 1:05,41; 1:14,50";
inline constexpr const char* kRot2D_v25_2 =
    "1:14,32; -1:05,41; -1:05,23; -1:14,50; 1:23,41; -1:32,50; 1:14,14; 1:41,41";
inline constexpr const char* kRot2D_v25_3 =
    "15:05,23; 5:05,41; 25:14,32; 5:14,50; 25:23,41; 15:32,50; 3:05,05; 3:50,50";

// 2D, products of order-2 and order-5 moments: the single affine invariant,
// over mu_00^9.
inline constexpr const char* kAffine2D_v2125 =
    "3:20,23,23; -2:11,23,32; -4:02,41,23; 3:02,32,32; -4:20,14,32;"
    "1:02,14,50; -1:11,05,50; 1:20,05,41; 3:11,14,41";

// 3D, degree-4 monomials in order-3 moments: the sparse 25-term affine
// invariant, over mu_000^8.
inline constexpr const char* kAffine3D_v43 =
    "-1:300,012,012,120; 1:012,012,210,210; 1:300,012,021,111; -1:012,021,201,210;"
    "-1:012,102,120,210; 1:030,300,012,102; -2:012,111,111,210; 3:012,111,120,201;"
    "-1:030,012,201,201; -1:300,021,021,102; 1:021,021,201,201; 3:021,102,111,210;"
    "-2:021,111,111,201; -1:021,102,120,201; 1:003,300,021,120; -1:003,021,210,210;"
    "1:102,102,120,120; -1:030,102,102,210; -2:102,111,111,120; 1:030,102,111,201;"
    "1:003,111,120,210; -1:003,030,300,111; -1:003,120,120,201; 1:003,030,201,210;"
    "1:111,111,111,111";

// 4D, degree-4 monomials in order-2 moments, over mu_0000^6.
inline constexpr const char* kAffine4D_v24 =
    "1:0011,0011,1100,1100; -1:0200,2000,0011,0011; 2:2000,0011,0101,0110;"
    "-2:0011,0101,1010,1100; -2:0011,0110,1001,1100; 2:0200,0011,1001,1010;"
    "1:0101,0101,1010,1010; -1:0020,2000,0101,0101; -2:0101,0110,1001,1010;"
    "1:0110,0110,1001,1001; 2:0020,0101,1001,1100; 2:0002,0110,1010,1100;"
    "1:0002,0020,0200,2000; -1:0020,0200,1001,1001; -1:0002,0200,1010,1010;"
    "-1:0002,2000,0110,0110; -1:0002,0020,1100,1100";

// 4D, degree-2 monomials in order-3 moments: two displayed rotation
// invariants (span members of the computed kernel).
inline constexpr const char* kRot4D_v32_1 =
    "1:0012,0012; -1:0012,0210; -1:0012,2010; -1:0030,0012; 1:0021,0021;"
    "-1:0021,0201; -1:0021,2001; -1:0003,0021; 1:0102,0102; -1:0102,0120;"
    "-1:0102,2100; -1:0300,0102; 3:0111,0111; 1:0120,0120; -1:0120,2100;"
    "-1:0300,0120; 1:0201,0201; -1:0201,2001; -1:0003,0201; 1:0210,0210;"
    "-1:0210,2010; -1:0030,0210; 1:1002,1002; -1:1002,1020; -1:1002,1200;"
    "-1:3000,1002; 3:1011,1011; 1:1020,1020; -1:1020,1200; -1:3000,1020;"
    "3:1101,1101; 3:1110,1110; 1:1200,1200; -1:3000,1200; 1:2001,2001;"
    "-1:0003,2001; 1:2010,2010; -1:0030,2010; 1:2100,2100; -1:0300,2100";
inline constexpr const char* kRot4D_v32_2 =
    "3:0003,0021; 3:0012,0030; 3:0003,0201; 3:0012,0210; 3:0021,0201;"
    "3:0102,0120; 3:0030,0210; 3:0102,0300; 3:0120,0300; 3:0003,2001;"
    "3:0012,2010; 3:0021,2001; 3:1002,1020; 3:0030,2010; 3:0102,2100;"
    "3:0201,2001; 3:1002,1200; 3:0120,2100; 3:0210,2010; 3:1020,1200;"
    "3:0300,2100; 3:1002,3000; 3:1020,3000; 3:1200,3000; 1:0003,0003;"
    "1:0030,0030; -3:0111,0111; 1:0300,0300; -3:1011,1011; -3:1101,1101;"
    "-3:1110,1110; 1:3000,3000";

}  // namespace fixtures
