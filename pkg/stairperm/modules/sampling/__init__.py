from .sampler_module import CountTable, UniformSampler, make_rng
