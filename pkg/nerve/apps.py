from django.apps import AppConfig


class NerveConfig(AppConfig):
    name = "nerve"
    verbose_name = "Cyclic nerves"
