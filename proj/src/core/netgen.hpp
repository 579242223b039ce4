#pragma once

#include "types.hpp"

namespace draco {

// Analytic work/storage/reuse counts for one layer.
// StandardConv: macs = m*n*dk^2*df^2, params = m*n*dk^2.
// GroupedConv(G): macs = m*G*dk^2*df^2, params = m*G*dk^2.
// Pooling: zero macs/params (activation traffic only).
// FullyConnected: standard conv with dk = df = 1.
layer_counts count_layer(const layer_spec& layer);

// MobileNetV1 family: stem 3x3 s2 conv, 13 [3x3 grouped, 1x1] blocks,
// global average pool, FC to 1000 classes. Channels scale as round(alpha*c),
// input spatial as round(224*rho). Grouped layers get channels_per_group =
// min(G, channels). The stem's in_channels follow round(3*alpha) so that the
// whole-network counts match the published reference tables, which scale the
// stem quadratically in alpha (counting convention only; see README).
network_spec generate_mobilenet_v1(double alpha, double rho, int G);

// Re-group every grouped layer to min(G, its channels); everything else kept.
network_spec apply_group_size(const network_spec& net, int G);

// Element-wise sum over layers; reuse ratios recomputed from the summed terms.
layer_counts network_counts(const network_spec& net);

}  // namespace draco
