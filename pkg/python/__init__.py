# Paquets coxmod (sources sous python/)
