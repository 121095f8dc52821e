"""Formula, model, simulation, normal-form, characterisation and oracle logic."""
