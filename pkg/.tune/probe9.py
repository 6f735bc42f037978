import sys
import time

import torch

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
zf = sense_combine(ifft2c(s.measured), s.forward_model.coil_maps)
print("zf psnr", psnr(torch.abs(zf), ref), flush=True)

model = KSpaceDiffusionModel.load(".tune/static64.pt")

for eta in (0.3, 0.5, 1.0):
    for k in (2, 4):
        for lim in (0.5, 0.75):
            model.eta_init = eta
            model.k_gd = k
            model.x0_limit = lim
            model.step_sizes_ = StepSizes(k, eta)
            rc = model.predict(s.measured, s.forward_model, seed=7)
            img = torch.abs(reconstruct_image(rc, s.forward_model.coil_maps))
            print(f"eta={eta} k={k} lim={lim}: psnr={psnr(img, ref):.2f}", flush=True)
