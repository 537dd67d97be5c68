from django.apps import AppConfig


class InvariantsConfig(AppConfig):
    name = "invariants"
    verbose_name = "Order-Y invariants"
