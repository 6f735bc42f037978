import math
import torch

from mridiff import *
from mridiff.static import *
from mridiff.phantom import *
from mridiff.dataset import *
from mridiff.experiment import *
from mridiff.channels import complex_to_channels, channels_to_complex
from mridiff.schedule import posterior_mean

spec = PhantomSpec(size=32, n_coils=4, mode="static", n_slices=8, seed=0)
ds = make_phantom(spec)
us = undersample(ds, MaskSpec(kind="cartesian", af=4.0, center=4, seed=1))
samples = build_static_samples(us)
s = samples[0]
ref = reconstruct_image(s.fhat0, s.forward_model.coil_maps)
model = KSpaceDiffusionModel.load(".tune/w32ema.pt")
sched = model.noise_schedule_
scale = model.scale_
f0 = s.fhat0 / scale
off = s.forward_model.mask.mask == 0
on = ~off
truth_off = float(torch.sqrt(torch.mean(torch.abs(f0[:, off]) ** 2)))
print("truth off-mask rms", truth_off)

ctx = StaticGuidanceContext(
    forward_model=s.forward_model,
    measured=s.measured / scale,
    dc_schedule=model.dc_schedule_,
    eta=model.step_sizes_.values().detach(),
    noise_schedule=sched,
)

gen = torch.Generator().manual_seed(123)
shape = s.measured.shape

def cnoise():
    return torch.complex(torch.randn(shape, generator=gen), torch.randn(shape, generator=gen))

LIMIT = 0.5
fhat = cnoise()
model.net_.eval()
with torch.no_grad():
    for t in range(sched.T, 0, -1):
        eps = channels_to_complex(model.net_(complex_to_channels(fhat), torch.tensor(t)))
        abar = float(sched.alpha_bar[t - 1])
        x0 = (fhat - math.sqrt(1 - abar) * eps) / math.sqrt(abar)
        x0c = clamp_modulus(x0, LIMIT)
        mu = posterior_mean(fhat, x0c, t, sched)
        if t > 1:
            sigma = math.sqrt(float(sched.posterior_var[t - 1]))
            fhat = mu + sigma * cnoise()
        else:
            fhat = mu
        fhat = guide(fhat, t - 1, ctx)
        if t % 10 == 0 or t <= 10:
            # expected off-mask rms of the forward marginal (noise var 2/complex entry)
            exp_off = math.sqrt(abar * truth_off ** 2 + (1 - abar) * 2)
            cur_off = float(torch.sqrt(torch.mean(torch.abs(fhat[:, off]) ** 2)))
            x0img = reconstruct_image(x0c * scale, s.forward_model.coil_maps)
            x0err_off = float(torch.sqrt(torch.mean(torch.abs((x0c - f0)[:, off]) ** 2)))
            print(f"t={t:3d} abar={abar:.4f} off_rms={cur_off:.4f} (marginal {exp_off:.4f}) "
                  f"x0_psnr={psnr(x0img, ref):6.2f} x0_off_err={x0err_off:.4f}", flush=True)

img = reconstruct_image(fhat * scale, s.forward_model.coil_maps)
print("final psnr", psnr(img, ref))
