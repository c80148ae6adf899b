"""Multi-reference image composition with calibrated reference features.

A small latent-diffusion model inserts a foreground object into a bounding
box of a background image, conditioned on up to five reference images of the
object. The reference features are calibrated toward background-compatible
versions by cross-attention over denoiser encoder features, and the
calibrated features are appended to the plain ones in the decoder context.

Everything runs on CPU at 64x64 with networks trained from scratch; a
synthetic multi-view scene generator replaces external datasets.
"""

__version__ = "0.1.0"

CHECKPOINT_FORMAT_VERSION = 1
MANIFEST_FORMAT_VERSION = 1
