import time

import torch
from scipy.ndimage import binary_dilation

from mridiff import *
from mridiff.static import *
from mridiff.phantom import *
from mridiff.dataset import *
from mridiff.experiment import *

spec = PhantomSpec(size=64, n_coils=4, mode="static", n_slices=8, seed=0)
full = make_phantom(spec)
us = undersample(full, MaskSpec(kind="cartesian", af=4.0, center=8, seed=1))
s = build_static_samples(us)[0]
ref = torch.abs(full["images"][0])

model = KSpaceDiffusionModel.load(".tune/static64.pt")

def sampler(seed):
    return torch.abs(reconstruct_image(
        model.predict(s.measured, s.forward_model, seed=seed),
        s.forward_model.coil_maps))

t0 = time.time()
r10 = uncertainty_study(sampler, 10, ref, base_seed=100)
print(f"n=10 done t={time.time()-t0:.0f}s", flush=True)
r50 = uncertainty_study(sampler, 50, ref, base_seed=100)
print(f"n=50 done t={time.time()-t0:.0f}s", flush=True)
n10 = nmse(r10.mean_img, ref.double())
n50 = nmse(r50.mean_img, ref.double())

gx = torch.zeros_like(ref)
gy = torch.zeros_like(ref)
gx[:, 1:] = ref[:, 1:] - ref[:, :-1]
gy[1:, :] = ref[1:, :] - ref[:-1, :]
gmag = torch.sqrt(gx**2 + gy**2)
edges = gmag > 0.1 * float(gmag.max())
dilated = torch.from_numpy(binary_dilation(edges.numpy(), iterations=3))
mass = float(r50.variance_map[dilated].sum() / r50.variance_map.sum())
print(f"nmse n10={n10:.5f} n50={n50:.5f} (need n50<=n10) edge-mass={mass:.3f} (need >=0.6)")
