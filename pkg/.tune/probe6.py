import sys
import torch

from mridiff import *
from mridiff.static import *
from mridiff.phantom import *
from mridiff.dataset import *
from mridiff.experiment import *

ckpt = sys.argv[1] if len(sys.argv) > 1 else ".tune/fixedsched.pt"

spec = PhantomSpec(size=32, n_coils=4, mode="static", n_slices=8, seed=0)
ds = make_phantom(spec)
us = undersample(ds, MaskSpec(kind="cartesian", af=4.0, center=4, seed=1))
samples = build_static_samples(us)
s = samples[0]
ref = reconstruct_image(s.fhat0, s.forward_model.coil_maps)
zf = sense_combine(ifft2c(s.measured), s.forward_model.coil_maps)
print("zf psnr", psnr(zf, ref), flush=True)

model = KSpaceDiffusionModel.load(ckpt)
print("ckpt", ckpt, "scale", model.scale_)

for limit in (0.0, 1.0, 0.5, 2.0):
    ctx = StaticGuidanceContext(
        forward_model=s.forward_model,
        measured=s.measured,
        dc_schedule=model.dc_schedule_,
        eta=model.step_sizes_.values().detach(),
        noise_schedule=model.noise_schedule_,
    )
    fhat0 = sample(ctx, model.net_, seed=123, scale=model.scale_, x0_limit=limit)
    img = reconstruct_image(fhat0, s.forward_model.coil_maps)
    off = s.forward_model.mask.mask == 0
    offrms = float(torch.sqrt(torch.mean(torch.abs(fhat0[:, off] / model.scale_) ** 2)))
    print(f"x0_limit={limit}: psnr={psnr(img, ref):.2f} off-mask-rms={offrms:.4f}", flush=True)
