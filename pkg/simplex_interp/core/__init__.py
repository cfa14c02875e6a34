# Se deja vacío para ser un módulo de Python correcto
