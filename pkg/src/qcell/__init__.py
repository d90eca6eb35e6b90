"""qcell: exact dual canonical bases for quantum unipotent cells of affine sl2.

The package computes, from first principles in exact arithmetic: PBW root
vectors and their Gram matrix, the bar involution and its triangular solve,
the rescaled dual canonical basis, the quantum cluster seed with
Berenstein-Zelevinsky mutation, and expansion tables whose rows label
classes of simple equivariant perverse coherent sheaves on the affine
Grassmannian expanded in convolution classes of minuscule line bundles.
"""

__version__ = "0.1.0"
