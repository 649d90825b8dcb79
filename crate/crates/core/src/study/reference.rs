//! Reference values for the 5×5 grid tables (rows with p1 >= p2).
//!
//! Columns: p1, p2, TBias(CMLE), TBias(UMLE), Rel-Var, RelL_B, RelL_W,
//! C_cond, C_B, C_W.
//!
//! The odds-ratio and relative-risk sets are keyed by the allocation rule
//! that reproduces their exact Wald coverage; the published captions of
//! those two tables name them the other way round.

pub type ReferenceRow = [f64; 10];

pub const SDD_25: [ReferenceRow; 15] = [
    [0.1, 0.1, 0.01, 0.03, 0.69, 0.93, 1.11, 0.9977, 0.9987, 0.9960],
    [0.3, 0.1, 0.02, 0.04, 0.80, 1.06, 1.08, 0.9709, 0.9706, 0.9479],
    [0.3, 0.3, 0.03, 0.06, 0.88, 1.20, 1.06, 0.9597, 0.9868, 0.9315],
    [0.5, 0.1, 0.02, 0.03, 0.84, 1.35, 1.07, 0.9555, 0.9603, 0.9370],
    [0.5, 0.3, 0.04, 0.07, 0.94, 1.42, 1.06, 0.9550, 0.9811, 0.9228],
    [0.5, 0.5, 0.04, 0.08, 1.04, 1.50, 1.06, 0.9410, 0.9933, 0.9089],
    [0.7, 0.1, 0.02, 0.03, 0.84, 1.53, 1.10, 0.9576, 0.9636, 0.9410],
    [0.7, 0.3, 0.04, 0.06, 0.95, 1.50, 1.08, 0.9495, 0.9738, 0.9255],
    [0.7, 0.5, 0.04, 0.07, 1.08, 1.53, 1.07, 0.9350, 0.9912, 0.9095],
    [0.7, 0.7, 0.04, 0.07, 1.17, 1.59, 1.07, 0.9399, 0.9977, 0.9069],
    [0.9, 0.1, 0.02, 0.03, 0.79, 1.47, 1.17, 0.9876, 0.9976, 0.9918],
    [0.9, 0.3, 0.04, 0.06, 0.91, 1.39, 1.14, 0.9805, 0.9978, 0.9780],
    [0.9, 0.5, 0.04, 0.06, 1.05, 1.42, 1.11, 0.9663, 0.9994, 0.9605],
    [0.9, 0.7, 0.03, 0.05, 1.17, 1.55, 1.10, 0.9643, 0.9998, 0.9547],
    [0.9, 0.9, 0.02, 0.03, 1.22, 1.69, 1.10, 0.9699, 1.0000, 0.9905],
];

pub const SDD_50: [ReferenceRow; 15] = [
    [0.1, 0.1, 0.01, 0.02, 0.69, 0.89, 1.02, 0.9961, 0.9994, 0.9900],
    [0.3, 0.1, 0.01, 0.03, 0.75, 1.01, 1.02, 0.9632, 0.9360, 0.9414],
    [0.3, 0.3, 0.02, 0.05, 0.89, 1.14, 1.01, 0.9521, 0.9263, 0.9124],
    [0.5, 0.1, 0.01, 0.03, 0.73, 1.07, 1.05, 0.9634, 0.9610, 0.9561],
    [0.5, 0.3, 0.02, 0.06, 0.92, 1.26, 1.03, 0.9488, 0.9540, 0.9228],
    [0.5, 0.5, 0.03, 0.07, 1.07, 1.52, 1.02, 0.9383, 0.9599, 0.9124],
    [0.7, 0.1, 0.01, 0.03, 0.71, 1.22, 1.09, 0.9638, 0.9685, 0.9584],
    [0.7, 0.3, 0.03, 0.06, 0.88, 1.40, 1.05, 0.9524, 0.9646, 0.9330],
    [0.7, 0.5, 0.03, 0.06, 1.10, 1.70, 1.04, 0.9378, 0.9686, 0.9150],
    [0.7, 0.7, 0.02, 0.06, 1.24, 1.94, 1.04, 0.9276, 0.9762, 0.9118],
    [0.9, 0.1, 0.02, 0.03, 0.69, 1.65, 1.13, 0.9515, 0.9556, 0.9400],
    [0.9, 0.3, 0.03, 0.06, 0.84, 1.52, 1.09, 0.9544, 0.9759, 0.9270],
    [0.9, 0.5, 0.03, 0.06, 1.04, 1.55, 1.07, 0.9458, 0.9883, 0.9156],
    [0.9, 0.7, 0.02, 0.05, 1.23, 1.77, 1.06, 0.9451, 0.9966, 0.9180],
    [0.9, 0.9, 0.01, 0.02, 1.31, 1.89, 1.10, 0.9668, 0.9997, 0.9430],
];

pub const RPW_25: [ReferenceRow; 15] = [
    [0.1, 0.1, 0.01, 0.01, 0.77, 0.90, 1.05, 0.9963, 0.9984, 0.9961],
    [0.3, 0.1, 0.01, 0.01, 0.80, 0.92, 1.02, 0.9697, 0.9608, 0.9322],
    [0.3, 0.3, 0.00, 0.02, 0.84, 0.96, 1.00, 0.9561, 0.9693, 0.8973],
    [0.5, 0.1, 0.00, 0.02, 0.81, 0.93, 1.01, 0.9701, 0.9654, 0.9407],
    [0.5, 0.3, 0.00, 0.03, 0.87, 0.99, 1.00, 0.9632, 0.9627, 0.9084],
    [0.5, 0.5, 0.01, 0.03, 0.92, 1.04, 1.00, 0.9505, 0.9407, 0.8868],
    [0.7, 0.1, 0.00, 0.02, 0.79, 0.96, 1.03, 0.9769, 0.9637, 0.9492],
    [0.7, 0.3, 0.01, 0.03, 0.86, 1.03, 1.02, 0.9670, 0.9615, 0.9271],
    [0.7, 0.5, 0.01, 0.04, 0.95, 1.11, 1.01, 0.9470, 0.9503, 0.8964],
    [0.7, 0.7, 0.02, 0.04, 1.04, 1.22, 1.02, 0.9534, 0.9459, 0.8946],
    [0.9, 0.1, 0.01, 0.02, 0.75, 1.16, 1.10, 0.9870, 0.9880, 0.9911],
    [0.9, 0.3, 0.03, 0.05, 0.84, 1.17, 1.09, 0.9827, 0.9890, 0.9809],
    [0.9, 0.5, 0.03, 0.05, 0.96, 1.21, 1.07, 0.9697, 0.9888, 0.9614],
    [0.9, 0.7, 0.03, 0.05, 1.10, 1.31, 1.06, 0.9731, 0.9831, 0.9520],
    [0.9, 0.9, 0.02, 0.03, 1.25, 1.40, 1.07, 0.9685, 0.9955, 0.9893],
];

pub const RPW_50: [ReferenceRow; 15] = [
    [0.1, 0.1, 0.00, 0.00, 0.83, 0.91, 0.99, 0.9939, 0.9962, 0.9964],
    [0.3, 0.1, 0.00, 0.01, 0.82, 0.92, 0.96, 0.9726, 0.9597, 0.9529],
    [0.3, 0.3, 0.00, 0.01, 0.86, 0.94, 0.95, 0.9490, 0.9232, 0.9068],
    [0.5, 0.1, 0.00, 0.01, 0.80, 0.91, 0.96, 0.9810, 0.9710, 0.9613],
    [0.5, 0.3, 0.00, 0.01, 0.87, 0.95, 0.95, 0.9512, 0.9326, 0.9094],
    [0.5, 0.5, 0.00, 0.02, 0.90, 0.98, 0.95, 0.9564, 0.9426, 0.9165],
    [0.7, 0.1, 0.00, 0.01, 0.79, 0.92, 0.98, 0.9839, 0.9693, 0.9633],
    [0.7, 0.3, 0.00, 0.02, 0.86, 0.97, 0.97, 0.9529, 0.9371, 0.9108],
    [0.7, 0.5, 0.00, 0.02, 0.92, 1.02, 0.96, 0.9510, 0.9387, 0.9130],
    [0.7, 0.7, 0.01, 0.02, 0.98, 1.08, 0.97, 0.9459, 0.9342, 0.9150],
    [0.9, 0.1, 0.01, 0.01, 0.71, 0.98, 1.06, 0.9709, 0.9533, 0.9553],
    [0.9, 0.3, 0.01, 0.03, 0.81, 1.05, 1.04, 0.9610, 0.9563, 0.9236],
    [0.9, 0.5, 0.01, 0.04, 0.93, 1.18, 1.02, 0.9584, 0.9600, 0.9019],
    [0.9, 0.7, 0.01, 0.03, 1.09, 1.31, 1.01, 0.9567, 0.9575, 0.9099],
    [0.9, 0.9, 0.01, 0.02, 1.29, 1.36, 1.04, 0.9741, 0.9794, 0.9416],
];

pub const NAD_25: [ReferenceRow; 15] = [
    [0.1, 0.1, 0.01, 0.01, 0.89, 1.01, 1.15, 0.9951, 0.9966, 0.9954],
    [0.3, 0.1, 0.01, 0.01, 0.97, 1.02, 1.08, 0.9520, 0.9607, 0.9378],
    [0.3, 0.3, 0.01, 0.01, 1.03, 1.05, 1.04, 0.9268, 0.9539, 0.8967],
    [0.5, 0.1, 0.00, 0.01, 0.99, 1.03, 1.06, 0.9583, 0.9557, 0.9301],
    [0.5, 0.3, 0.00, 0.01, 1.04, 1.06, 1.02, 0.9275, 0.9425, 0.8860],
    [0.5, 0.5, 0.00, 0.00, 1.06, 1.07, 1.00, 0.9257, 0.9255, 0.8710],
    [0.7, 0.1, 0.01, 0.01, 0.97, 1.02, 1.08, 0.9636, 0.9607, 0.9378],
    [0.7, 0.3, 0.01, 0.01, 1.03, 1.06, 1.04, 0.9269, 0.9539, 0.8967],
    [0.7, 0.5, 0.00, 0.01, 1.04, 1.06, 1.02, 0.9265, 0.9425, 0.8860],
    [0.7, 0.7, 0.01, 0.01, 1.03, 1.06, 1.04, 0.9248, 0.9539, 0.8967],
    [0.9, 0.1, 0.01, 0.01, 0.89, 0.98, 1.12, 0.9886, 0.9966, 0.9954],
    [0.9, 0.3, 0.01, 0.01, 0.97, 1.03, 1.08, 0.9532, 0.9607, 0.9378],
    [0.9, 0.5, 0.00, 0.01, 0.99, 1.04, 1.07, 0.9571, 0.9557, 0.9301],
    [0.9, 0.7, 0.01, 0.01, 0.97, 1.03, 1.09, 0.9534, 0.9607, 0.9378],
    [0.9, 0.9, 0.01, 0.01, 0.89, 1.00, 1.14, 0.9899, 0.9966, 0.9954],
];

pub const NAD_50: [ReferenceRow; 15] = [
    [0.1, 0.1, 0.00, 0.01, 0.85, 0.96, 1.04, 0.9954, 0.9969, 0.9954],
    [0.3, 0.1, 0.00, 0.01, 0.92, 0.99, 1.02, 0.9597, 0.9540, 0.9500],
    [0.3, 0.3, 0.00, 0.01, 1.01, 1.04, 1.00, 0.9268, 0.9122, 0.9021],
    [0.5, 0.1, 0.00, 0.01, 0.93, 0.99, 1.02, 0.9639, 0.9671, 0.9567],
    [0.5, 0.3, 0.00, 0.00, 1.02, 1.04, 1.00, 0.9310, 0.9222, 0.9069],
    [0.5, 0.5, 0.00, 0.00, 1.04, 1.05, 1.00, 0.9349, 0.9359, 0.9116],
    [0.7, 0.1, 0.00, 0.01, 0.92, 1.00, 1.03, 0.9601, 0.9540, 0.9500],
    [0.7, 0.3, 0.00, 0.01, 1.01, 1.04, 1.00, 0.9267, 0.9122, 0.9021],
    [0.7, 0.5, 0.00, 0.00, 1.02, 1.04, 1.00, 0.9307, 0.9222, 0.9069],
    [0.7, 0.7, 0.00, 0.01, 1.01, 1.04, 1.00, 0.9267, 0.9122, 0.9021],
    [0.9, 0.1, 0.00, 0.01, 0.85, 0.97, 1.05, 0.9938, 0.9969, 0.9954],
    [0.9, 0.3, 0.00, 0.01, 0.92, 1.00, 1.03, 0.9588, 0.9540, 0.9500],
    [0.9, 0.5, 0.00, 0.01, 0.93, 0.99, 1.02, 0.9639, 0.9671, 0.9567],
    [0.9, 0.7, 0.00, 0.01, 0.92, 1.00, 1.03, 0.9589, 0.9540, 0.9500],
    [0.9, 0.9, 0.00, 0.01, 0.85, 0.97, 1.05, 0.9944, 0.9969, 0.9954],
];

pub const OPT_SD_25: [ReferenceRow; 15] = [
    [0.1, 0.1, 0.00, 0.01, 0.77, 0.94, 1.11, 0.9954, 0.9980, 0.9957],
    [0.3, 0.1, 0.01, 0.02, 0.86, 0.97, 1.06, 0.9647, 0.9602, 0.9407],
    [0.3, 0.3, 0.01, 0.02, 0.92, 1.02, 1.03, 0.9553, 0.9704, 0.9116],
    [0.5, 0.1, 0.01, 0.02, 0.88, 0.98, 1.04, 0.9486, 0.9602, 0.9355],
    [0.5, 0.3, 0.01, 0.02, 0.94, 1.03, 1.02, 0.9493, 0.9562, 0.9034],
    [0.5, 0.5, 0.01, 0.02, 0.99, 1.06, 1.01, 0.9312, 0.9298, 0.8782],
    [0.7, 0.1, 0.01, 0.01, 0.86, 0.98, 1.06, 0.9538, 0.9554, 0.9381],
    [0.7, 0.3, 0.01, 0.02, 0.94, 1.03, 1.03, 0.9532, 0.9512, 0.9092],
    [0.7, 0.5, 0.01, 0.02, 1.00, 1.06, 1.01, 0.9285, 0.9246, 0.8786],
    [0.7, 0.7, 0.01, 0.01, 1.04, 1.05, 1.00, 0.9449, 0.9345, 0.8769],
    [0.9, 0.1, 0.01, 0.01, 0.80, 0.96, 1.10, 0.9879, 0.9927, 0.9944],
    [0.9, 0.3, 0.01, 0.02, 0.90, 1.02, 1.07, 0.9870, 0.9893, 0.9710],
    [0.9, 0.5, 0.01, 0.02, 0.99, 1.06, 1.05, 0.9539, 0.9561, 0.9358],
    [0.9, 0.7, 0.00, 0.01, 1.04, 1.06, 1.05, 0.9709, 0.9669, 0.9348],
    [0.9, 0.9, 0.00, 0.01, 1.07, 1.06, 1.10, 0.9858, 0.9859, 0.9936],
];

pub const OPT_SD_50: [ReferenceRow; 15] = [
    [0.1, 0.1, 0.00, 0.01, 0.78, 0.92, 1.01, 0.9962, 0.9978, 0.9955],
    [0.3, 0.1, 0.00, 0.01, 0.84, 0.95, 0.99, 0.9642, 0.9531, 0.9494],
    [0.3, 0.3, 0.00, 0.01, 0.92, 1.01, 0.97, 0.9434, 0.9077, 0.8992],
    [0.5, 0.1, 0.00, 0.01, 0.83, 0.95, 1.00, 0.9680, 0.9698, 0.9594],
    [0.5, 0.3, 0.00, 0.01, 0.93, 1.01, 0.98, 0.9455, 0.9228, 0.9062],
    [0.5, 0.5, 0.00, 0.01, 0.97, 1.02, 0.98, 0.9366, 0.9369, 0.9131],
    [0.7, 0.1, 0.00, 0.01, 0.80, 0.94, 1.01, 0.9634, 0.9659, 0.9576],
    [0.7, 0.3, 0.00, 0.01, 0.92, 1.01, 0.98, 0.9445, 0.9198, 0.9051],
    [0.7, 0.5, 0.00, 0.01, 0.97, 1.02, 0.99, 0.9313, 0.9316, 0.9124],
    [0.7, 0.7, 0.00, 0.01, 1.00, 1.03, 1.00, 0.9171, 0.9303, 0.9131],
    [0.9, 0.1, 0.00, 0.01, 0.72, 0.93, 1.03, 0.9908, 0.9944, 0.9280],
    [0.9, 0.3, 0.00, 0.01, 0.88, 1.01, 1.00, 0.9724, 0.9486, 0.9034],
    [0.9, 0.5, 0.00, 0.01, 0.96, 1.02, 1.00, 0.9645, 0.9608, 0.9303],
    [0.9, 0.7, 0.00, 0.00, 1.00, 1.02, 1.01, 0.9552, 0.9584, 0.9440],
    [0.9, 0.9, 0.00, 0.00, 1.02, 1.02, 1.05, 0.9894, 0.9897, 0.9893],
];

pub const OPT_RR_25: [ReferenceRow; 15] = [
    [0.1, 0.1, 0.00, 0.02, 0.66, 0.85, 1.03, 0.9977, 0.9991, 0.9962],
    [0.3, 0.1, 0.00, 0.03, 0.74, 0.89, 1.00, 0.9768, 0.9510, 0.9430],
    [0.3, 0.3, 0.01, 0.04, 0.81, 0.95, 0.98, 0.9785, 0.9738, 0.9313],
    [0.5, 0.1, 0.01, 0.03, 0.74, 0.92, 1.00, 0.9701, 0.9530, 0.9383],
    [0.5, 0.3, 0.01, 0.05, 0.84, 0.99, 0.99, 0.9704, 0.9563, 0.9238],
    [0.5, 0.5, 0.02, 0.06, 0.94, 1.08, 0.99, 0.9633, 0.9427, 0.9025],
    [0.7, 0.1, 0.01, 0.03, 0.71, 0.94, 1.04, 0.9719, 0.9559, 0.9522],
    [0.7, 0.3, 0.03, 0.06, 0.83, 1.02, 1.02, 0.9690, 0.9566, 0.9354],
    [0.7, 0.5, 0.03, 0.07, 0.99, 1.15, 1.01, 0.9579, 0.9494, 0.9089],
    [0.7, 0.7, 0.04, 0.08, 1.17, 1.33, 1.02, 0.9536, 0.9270, 0.8973],
    [0.9, 0.1, 0.02, 0.03, 0.71, 1.10, 1.13, 0.9800, 0.9900, 0.9884],
    [0.9, 0.3, 0.05, 0.07, 0.84, 1.12, 1.12, 0.9885, 0.9875, 0.9787],
    [0.9, 0.5, 0.07, 0.10, 1.02, 1.21, 1.10, 0.9823, 0.9835, 0.9676],
    [0.9, 0.7, 0.06, 0.10, 1.27, 1.41, 1.08, 0.9750, 0.9726, 0.9567],
    [0.9, 0.9, 0.06, 0.08, 1.52, 1.70, 1.09, 0.9691, 0.9879, 0.9912],
];

pub const OPT_RR_50: [ReferenceRow; 15] = [
    [0.1, 0.1, 0.00, 0.01, 0.72, 0.86, 0.96, 0.9968, 0.9987, 0.9957],
    [0.3, 0.1, 0.00, 0.02, 0.76, 0.90, 0.94, 0.9719, 0.9485, 0.9475],
    [0.3, 0.3, 0.00, 0.03, 0.85, 0.98, 0.93, 0.9587, 0.8981, 0.8959],
    [0.5, 0.1, 0.00, 0.02, 0.72, 0.88, 0.96, 0.9783, 0.9675, 0.9604],
    [0.5, 0.3, 0.01, 0.03, 0.85, 0.98, 0.93, 0.9653, 0.9221, 0.9121],
    [0.5, 0.5, 0.00, 0.03, 0.93, 1.05, 0.93, 0.9586, 0.9193, 0.9078],
    [0.7, 0.1, 0.01, 0.02, 0.65, 0.87, 0.99, 0.9786, 0.9691, 0.9637],
    [0.7, 0.3, 0.01, 0.04, 0.80, 0.95, 0.96, 0.9731, 0.9589, 0.9354],
    [0.7, 0.5, 0.01, 0.04, 0.94, 1.08, 0.94, 0.9618, 0.9238, 0.9136],
    [0.7, 0.7, 0.01, 0.04, 1.07, 1.20, 0.94, 0.9587, 0.9151, 0.9141],
    [0.9, 0.1, 0.02, 0.03, 0.62, 0.93, 1.08, 0.9678, 0.9598, 0.9621],
    [0.9, 0.3, 0.04, 0.06, 0.76, 0.99, 1.05, 0.9639, 0.9560, 0.9460],
    [0.9, 0.5, 0.04, 0.07, 0.95, 1.11, 1.03, 0.9578, 0.9541, 0.9211],
    [0.9, 0.7, 0.03, 0.07, 1.21, 1.37, 1.00, 0.9558, 0.9354, 0.9049],
    [0.9, 0.9, 0.03, 0.05, 1.71, 1.81, 1.01, 0.9653, 0.9488, 0.9214],
];

pub const OPT_OR_25: [ReferenceRow; 15] = [
    [0.1, 0.1, 0.01, 0.01, 0.99, 1.06, 1.16, 0.9900, 0.9934, 0.9944],
    [0.3, 0.1, 0.00, 0.01, 1.04, 1.06, 1.05, 0.9308, 0.9545, 0.9335],
    [0.3, 0.3, 0.00, 0.00, 1.08, 1.09, 1.00, 0.9036, 0.9342, 0.8833],
    [0.5, 0.1, 0.01, 0.02, 1.03, 1.08, 1.05, 0.9481, 0.9511, 0.9308],
    [0.5, 0.3, 0.01, 0.02, 1.07, 1.11, 1.00, 0.9127, 0.9219, 0.8799],
    [0.5, 0.5, 0.02, 0.03, 1.07, 1.12, 1.00, 0.9189, 0.9159, 0.8771],
    [0.7, 0.1, 0.02, 0.03, 0.92, 1.03, 1.08, 0.9873, 0.9919, 0.9697],
    [0.7, 0.3, 0.02, 0.03, 0.96, 1.06, 1.04, 0.9341, 0.9494, 0.9129],
    [0.7, 0.5, 0.02, 0.04, 0.99, 1.08, 1.03, 0.9455, 0.9493, 0.9094],
    [0.7, 0.7, 0.03, 0.04, 0.96, 1.05, 1.05, 0.9700, 0.9702, 0.9270],
    [0.9, 0.1, 0.01, 0.02, 0.72, 0.95, 1.12, 0.9912, 0.9963, 0.9950],
    [0.9, 0.3, 0.01, 0.02, 0.81, 0.99, 1.08, 0.9319, 0.9496, 0.9337],
    [0.9, 0.5, 0.02, 0.02, 0.84, 1.02, 1.07, 0.9448, 0.9520, 0.9322],
    [0.9, 0.7, 0.02, 0.03, 0.83, 0.99, 1.08, 0.9702, 0.9521, 0.9437],
    [0.9, 0.9, 0.01, 0.02, 0.69, 0.92, 1.11, 0.9943, 0.9991, 0.9957],
];

pub const OPT_OR_50: [ReferenceRow; 15] = [
    [0.1, 0.1, 0.00, 0.01, 0.94, 1.00, 1.07, 0.9939, 0.9955, 0.9952],
    [0.3, 0.1, 0.00, 0.01, 1.00, 1.02, 1.03, 0.9508, 0.9526, 0.9499],
    [0.3, 0.3, 0.00, 0.00, 1.04, 1.06, 1.00, 0.9072, 0.9137, 0.9037],
    [0.5, 0.1, 0.01, 0.01, 1.01, 1.05, 1.01, 0.9627, 0.9570, 0.9493],
    [0.5, 0.3, 0.01, 0.01, 1.04, 1.07, 0.98, 0.9243, 0.9155, 0.9045],
    [0.5, 0.5, 0.01, 0.01, 1.04, 1.09, 0.97, 0.9349, 0.9213, 0.9057],
    [0.7, 0.1, 0.01, 0.02, 0.88, 1.03, 1.00, 0.9777, 0.9399, 0.9360],
    [0.7, 0.3, 0.01, 0.02, 0.89, 1.03, 0.98, 0.9465, 0.9065, 0.9048],
    [0.7, 0.5, 0.01, 0.02, 0.92, 1.05, 0.97, 0.9535, 0.9100, 0.9052],
    [0.7, 0.7, 0.01, 0.03, 0.92, 1.06, 0.97, 0.9583, 0.8902, 0.8953],
    [0.9, 0.1, 0.01, 0.02, 0.59, 0.88, 1.00, 0.9909, 0.9969, 0.9589],
    [0.9, 0.3, 0.01, 0.02, 0.64, 0.90, 0.99, 0.9571, 0.9614, 0.9543],
    [0.9, 0.5, 0.01, 0.02, 0.68, 0.92, 0.98, 0.9633, 0.9663, 0.9582],
    [0.9, 0.7, 0.01, 0.02, 0.73, 0.95, 0.98, 0.9663, 0.9438, 0.9455],
    [0.9, 0.9, 0.00, 0.02, 0.70, 0.88, 0.98, 0.9951, 0.9991, 0.9951],
];
