#![allow(dead_code)]

/// Rotation-3 APA S-box reference table, row-major, decimal.
pub const REFERENCE_ROTATION_3: [u8; 256] = [
    145,  27, 105, 184, 161, 138, 227, 107, 155, 185, 235, 129,  76, 158, 156, 215,
     18,  20,  38, 164, 237,  43, 118,  21, 193, 202,  68, 154, 110, 192,  19, 128,
     59,  51, 182, 135, 172, 251, 125, 104, 122,  73,  97, 149, 121, 213, 127,   7,
     56, 211,  90,  49, 245, 229, 249,  58, 165, 218,  10,  64,  40, 186,  89, 163,
    200,  24,  98,  57,  82,  91,  29,  47,  77,   1, 167,   2,  11, 220,  34, 195,
    108, 178,  39, 101, 244, 148, 232, 176,  75, 112,  16, 144,  46, 103, 190,  94,
    106, 236, 141,  71, 222, 160,  74,  72, 136, 119,  67, 207, 238,  87, 187, 228,
     62, 246, 180,  88, 212, 146, 198,  80, 117, 102, 247,  45, 131, 223,  79,  35,
     44, 173,  96, 205,   8, 115, 151, 248,  25,  60, 153,  14, 111, 210, 139,  86,
     70,  28, 231, 216,  55,  78, 194,  52, 188,   6, 255,  12, 241, 252, 191, 174,
    162, 126, 169,  85, 189,  32,  37,  15, 230, 201, 140, 170, 243, 225, 217,  84,
    199,   5, 134,  50,  22, 142, 206, 233,  65, 132, 240,  69, 179, 168,  17, 221,
    196,   4,  63,  41, 120,  53,  66,  92, 109, 203,  99,  36, 116, 133,  26, 123,
     83, 208, 157,   3, 250, 254,  95, 166,  42, 150, 152, 234,  54,  30,  13,  23,
    242, 214, 209, 114, 175,  48, 147,  93, 124,   0, 224, 100, 239, 159, 177,  33,
    197, 253, 226, 219, 143,  61,  81, 181, 130,   9,  31, 204, 171, 183, 137, 113,
];
