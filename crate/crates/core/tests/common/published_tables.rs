// Wedge-product tables for c = 1..=9, transcribed cell-for-cell from the
// published tables. Indexed [c - 1][a][b].
pub const PUBLISHED_WEDGE_TABLES: [[[i8; 10]; 10]; 9] = [
    // c = 1
    [
        [0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 2, 2, 2, 2, 2, 2],
        [2, 2, 2, 2, 3, 3, 3, 3, 3, 3],
        [3, 3, 3, 3, 4, 4, 4, 4, 4, 4],
        [-6, -6, -6, -6, -5, -5, -5, -5, -5, -5],
        [-5, -5, -5, -5, -4, -4, -4, -4, -4, -4],
        [-4, -4, -4, -4, -3, -3, -3, -3, -3, -3],
        [-3, -3, -3, -3, -2, -2, -2, -2, -2, -2],
        [-2, -2, -2, -2, -1, -1, -1, -1, -1, -1],
        [-1, -1, -1, -1, 0, 0, 0, 0, 0, 0],
    ],
    // c = 2
    [
        [0, 0, 1, 1, 1, 1, 1, 2, 2, 2],
        [2, 2, 3, 3, 3, 3, 3, 4, 4, 4],
        [-6, -6, -5, -5, -5, -5, -5, -4, -4, -4],
        [-4, -4, -3, -3, -3, -3, -3, -2, -2, -2],
        [-2, -2, -1, -1, -1, -1, -1, 0, 0, 0],
        [0, 0, 1, 1, 1, 1, 1, 2, 2, 2],
        [2, 2, 3, 3, 3, 3, 3, 4, 4, 4],
        [-6, -6, -5, -5, -5, -5, -5, -4, -4, -4],
        [-4, -4, -3, -3, -3, -3, -3, -2, -2, -2],
        [-2, -2, -1, -1, -1, -1, -1, 0, 0, 0],
    ],
    // c = 3
    [
        [0, 0, 1, 1, 1, 2, 2, 2, 3, 3],
        [3, 3, 4, 4, 4, 5, 5, 5, 6, 6],
        [-4, -4, -3, -3, -3, -2, -2, -2, -1, -1],
        [-1, -1, 0, 0, 0, 1, 1, 1, 2, 2],
        [2, 2, 3, 3, 3, 4, 4, 4, 5, 5],
        [-5, -5, -4, -4, -4, -3, -3, -3, -2, -2],
        [-2, -2, -1, -1, -1, 0, 0, 0, 1, 1],
        [1, 1, 2, 2, 2, 3, 3, 3, 4, 4],
        [-6, -6, -5, -5, -5, -4, -4, -4, -3, -3],
        [-3, -3, -2, -2, -2, -1, -1, -1, 0, 0],
    ],
    // c = 4
    [
        [0, 1, 1, 1, 2, 2, 3, 3, 3, 4],
        [-6, -5, -5, -5, -4, -4, -3, -3, -3, -2],
        [-2, -1, -1, -1, 0, 0, 1, 1, 1, 2],
        [2, 3, 3, 3, 4, 4, 5, 5, 5, 6],
        [-4, -3, -3, -3, -2, -2, -1, -1, -1, 0],
        [0, 1, 1, 1, 2, 2, 3, 3, 3, 4],
        [-6, -5, -5, -5, -4, -4, -3, -3, -3, -2],
        [-2, -1, -1, -1, 0, 0, 1, 1, 1, 2],
        [2, 3, 3, 3, 4, 4, 5, 5, 5, 6],
        [-4, -3, -3, -3, -2, -2, -1, -1, -1, 0],
    ],
    // c = 5
    [
        [0, 1, 1, 2, 2, 3, 3, 4, 4, 5],
        [-5, -4, -4, -3, -3, -2, -2, -1, -1, 0],
        [0, 1, 1, 2, 2, 3, 3, 4, 4, 5],
        [-5, -4, -4, -3, -3, -2, -2, -1, -1, 0],
        [0, 1, 1, 2, 2, 3, 3, 4, 4, 5],
        [-5, -4, -4, -3, -3, -2, -2, -1, -1, 0],
        [0, 1, 1, 2, 2, 3, 3, 4, 4, 5],
        [-5, -4, -4, -3, -3, -2, -2, -1, -1, 0],
        [0, 1, 1, 2, 2, 3, 3, 4, 4, 5],
        [-5, -4, -4, -3, -3, -2, -2, -1, -1, 0],
    ],
    // c = 6
    [
        [0, 1, 1, 2, 3, 3, 4, 4, 5, 6],
        [-4, -3, -3, -2, -1, -1, 0, 0, 1, 2],
        [2, 3, 3, 4, 5, 5, 6, 6, 7, 8],
        [-2, -1, -1, 0, 1, 1, 2, 2, 3, 4],
        [-6, -5, -5, -4, -3, -3, -2, -2, -1, 0],
        [0, 1, 1, 2, 3, 3, 4, 4, 5, 6],
        [-4, -3, -3, -2, -1, -1, 0, 0, 1, 2],
        [2, 3, 3, 4, 5, 5, 6, 6, 7, 8],
        [-2, -1, -1, 0, 1, 1, 2, 2, 3, 4],
        [-6, -5, -5, -4, -3, -3, -2, -2, -1, 0],
    ],
    // c = 7
    [
        [0, 1, 2, 2, 3, 4, 4, 5, 6, 6],
        [-3, -2, -1, -1, 0, 1, 1, 2, 3, 3],
        [-6, -5, -4, -4, -3, -2, -2, -1, 0, 0],
        [1, 2, 3, 3, 4, 5, 5, 6, 7, 7],
        [-2, -1, 0, 0, 1, 2, 2, 3, 4, 4],
        [-5, -4, -3, -3, -2, -1, -1, 0, 1, 1],
        [2, 3, 4, 4, 5, 6, 6, 7, 8, 8],
        [-1, 0, 1, 1, 2, 3, 3, 4, 5, 5],
        [-4, -3, -2, -2, -1, 0, 0, 1, 2, 2],
        [3, 4, 5, 5, 6, 7, 7, 8, 9, 9],
    ],
    // c = 8
    [
        [0, 1, 2, 3, 3, 4, 5, 6, 7, 7],
        [-2, -1, 0, 1, 1, 2, 3, 4, 5, 5],
        [-4, -3, -2, -1, -1, 0, 1, 2, 3, 3],
        [-6, -5, -4, -3, -3, -2, -1, 0, 1, 1],
        [2, 3, 4, 5, 5, 6, 7, 8, 9, 9],
        [0, 1, 2, 3, 3, 4, 5, 6, 7, 7],
        [-2, -1, 0, 1, 1, 2, 3, 4, 5, 5],
        [-4, -3, -2, -1, -1, 0, 1, 2, 3, 3],
        [-6, -5, -4, -3, -3, -2, -1, 0, 1, 1],
        [2, 3, 4, 5, 5, 6, 7, 8, 9, 9],
    ],
    // c = 9
    [
        [0, 1, 2, 3, 4, 5, 6, 6, 7, 8],
        [-1, 0, 1, 2, 3, 4, 5, 5, 6, 7],
        [-2, -1, 0, 1, 2, 3, 4, 4, 5, 6],
        [-3, -2, -1, 0, 1, 2, 3, 3, 4, 5],
        [-4, -3, -2, -1, 0, 1, 2, 2, 3, 4],
        [-5, -4, -3, -2, -1, 0, 1, 1, 2, 3],
        [-6, -5, -4, -3, -2, -1, 0, 0, 1, 2],
        [3, 4, 5, 6, 7, 8, 9, 9, 10, 11],
        [2, 3, 4, 5, 6, 7, 8, 8, 9, 10],
        [1, 2, 3, 4, 5, 6, 7, 7, 8, 9],
    ],
];
